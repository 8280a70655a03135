// Counts structures on small paths and cycles and shows how a path structure
// lands on a cycle when its end vertices are merged.

#include "arithlab/arithlab.hpp"

#include <iostream>

using namespace arithlab;

int main() {
  std::cout << "n  |A(P_n)|  |A(C_n)|\n";
  for (std::size_t n = 2; n <= 8; ++n)
    std::cout << n << "  " << enumerate_path(n).size() << "  " << enumerate_cycle(n).size() << '\n';

  std::cout << "\nP_5 from seed (1,0,0,0,1), order v4 v3 v2:\n";
  auto r = algo_r(path_graph(5), make_vec({1, 0, 0, 0, 1}), {3, 2, 1});
  std::cout << format_structure(*recover_d(path_graph(5), r), r) << '\n';

  std::cout << "\nP_4 -> C_3 (w on v1):\n";
  for (const auto &pair : path_cycle_bijection(3, 1))
    std::cout << format_structure(pair.path.d, pair.path.r) << "  ->  "
              << format_structure(pair.cycle.d, pair.cycle.r) << '\n';
}
