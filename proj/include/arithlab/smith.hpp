#pragma once

#include "arithlab/bigint.hpp"
#include "arithlab/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace arithlab {

/// Finitely generated abelian group Z^free_rank + Z_{f1} + ... + Z_{fk},
/// with 1 < f1 | f2 | ... | fk.
struct AbelianGroup {
  Vec invariant_factors;
  std::size_t free_rank = 0;

  BigInt torsion_order() const {
    BigInt o = 1;
    for (const auto &f : invariant_factors) o *= f;
    return o;
  }

  bool torsion_trivial() const { return invariant_factors.empty(); }

  /// Torsion part only, e.g. "Z_2 + Z_6"; "0" when trivial.
  std::string torsion_string() const {
    if (invariant_factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
      if (i) s += " + ";
      s += "Z_" + invariant_factors[i].str();
    }
    return s;
  }

  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

struct SmithForm {
  AbelianGroup cokernel;
  Vec diagonal; // length min(rows, cols), d1 | d2 | ..., non-negative
};

/// Smith normal form by row/column reduction with smallest-nonzero pivoting.
/// The cokernel is Z^rows / Im(M).
inline SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t k = std::min(rows, cols);

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          BigInt v = abs(a(i, j));
          if (!found || v < best) {
            best = v;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) goto done;
      a.swap_rows(t, pi);
      a.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t c = t; c < cols; ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
done:
  SmithForm out;
  out.diagonal.resize(k);
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < k; ++t) {
    out.diagonal[t] = abs(a(t, t));
    if (out.diagonal[t] != 0) {
      ++nonzero;
      if (out.diagonal[t] > 1) out.cokernel.invariant_factors.push_back(out.diagonal[t]);
    }
  }
  out.cokernel.free_rank = rows - nonzero;
  return out;
}

/// Torsion part of coker(M).
inline AbelianGroup critical_group_of_matrix(const IntMatrix &m) {
  auto g = smith_normal_form(m).cokernel;
  g.free_rank = 0;
  return g;
}

} // namespace arithlab
