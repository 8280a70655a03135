#pragma once

#include "arithlab/bigint.hpp"
#include "arithlab/enumerate.hpp"
#include "arithlab/graph.hpp"
#include "arithlab/graph_io.hpp"
#include "arithlab/linalg.hpp"
#include "arithlab/matrix.hpp"
#include "arithlab/mclass.hpp"
#include "arithlab/parallel.hpp"
#include "arithlab/smith.hpp"
#include "arithlab/structure.hpp"
#include "arithlab/transforms.hpp"
