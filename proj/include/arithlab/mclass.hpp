#pragma once

// Classification of integer Z-matrices through principal minors, the
// determinant polynomial f_M(x) = det(M + diag(x)), and bounded searches for
// A_alpha(B) = { d > 0 : diag(d) - B is an M-matrix with det = alpha }.

#include "arithlab/bigint.hpp"
#include "arithlab/graph.hpp"
#include "arithlab/linalg.hpp"
#include "arithlab/matrix.hpp"
#include "arithlab/parallel.hpp"
#include "arithlab/smith.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arithlab {

/// Most specific class; each value implies all the ones before it except NotZ.
enum class MatrixClass { NotZ, ZOnly, MMatrix, AlmostNonsingularM, NonsingularM };

inline std::string to_string(MatrixClass c) {
  switch (c) {
  case MatrixClass::NotZ: return "not-Z";
  case MatrixClass::ZOnly: return "Z";
  case MatrixClass::MMatrix: return "M";
  case MatrixClass::AlmostNonsingularM: return "almost-nonsingular-M";
  case MatrixClass::NonsingularM: return "nonsingular-M";
  }
  return "?";
}

inline bool is_m_class(MatrixClass c) { return c >= MatrixClass::MMatrix; }
inline bool is_almost_nonsingular_class(MatrixClass c) { return c >= MatrixClass::AlmostNonsingularM; }

inline constexpr std::size_t max_exponential_size = 20;

template <typename T> bool is_z_matrix(const Matrix<T> &m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) > 0) return false;
  return true;
}

/// f_M as the table of principal minors: coefficient of x_{I^c} is det M[I;I],
/// stored at index mask(I).
class FmPolynomial {
public:
  FmPolynomial(std::size_t n, Vec coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

  std::size_t n() const { return n_; }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << n_) - 1; }

  /// det M[I;I] for the index set encoded by `mask`.
  const BigInt &minor(std::uint64_t mask) const { return coeffs_[mask]; }

  /// Coefficient of the monomial prod_{j in J} x_j.
  const BigInt &coefficient(std::uint64_t monomial) const { return coeffs_[full_mask() & ~monomial]; }

  const BigInt &constant_term() const { return coeffs_[full_mask()]; }

  BigInt evaluate(const Vec &x) const {
    BigInt total = 0;
    for (std::uint64_t j = 0; j <= full_mask(); ++j) {
      const BigInt &c = coefficient(j);
      if (c == 0) continue;
      BigInt term = c;
      for (std::size_t i = 0; i < n_; ++i)
        if (j >> i & 1u) term *= x[i];
      total += term;
    }
    return total;
  }

  /// Terms by decreasing degree, then lexicographically, e.g. "x1x2 + 2x1 + 1".
  std::string to_string() const {
    std::vector<std::uint64_t> monomials;
    for (std::uint64_t j = 0; j <= full_mask(); ++j) monomials.push_back(j);
    auto key = [&](std::uint64_t m) {
      return std::make_pair(-static_cast<int>(std::popcount(m)), subset_indices(m, n_));
    };
    std::sort(monomials.begin(), monomials.end(), [&](auto a, auto b) { return key(a) < key(b); });
    std::string out;
    for (auto m : monomials) {
      BigInt c = coefficient(m);
      if (c == 0) continue;
      bool negative = c < 0;
      if (negative) c = -c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::string mono;
      for (auto i : subset_indices(m, n_)) mono += "x" + std::to_string(i + 1);
      if (mono.empty())
        out += c.str();
      else
        out += (c == 1 ? "" : c.str()) + mono;
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const FmPolynomial &, const FmPolynomial &) = default;

private:
  std::size_t n_;
  Vec coeffs_;
};

/// Coefficients of f_M recovered from the values f_M(chi_S) at all 0/1
/// points by Moebius inversion (f_M is multilinear). This route does not
/// evaluate principal minors directly.
inline FmPolynomial fm_coefficients(const IntMatrix &m) {
  if (!m.square()) throw DomainError("f_M needs a square matrix");
  const std::size_t n = m.rows();
  if (n > max_exponential_size) throw DomainError("f_M limited to n <= 20");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // values[S] = f(chi_S)
  Vec values(full + 1);
  for (std::uint64_t s = 0; s <= full; ++s) {
    IntMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1u) shifted(i, i) += 1;
    values[s] = determinant(shifted);
  }
  // Subset Moebius transform: values becomes coefficient of x_S.
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t s = 0; s <= full; ++s)
      if (s >> i & 1u) values[s] -= values[s ^ (std::uint64_t{1} << i)];

  Vec minors(full + 1);
  for (std::uint64_t s = 0; s <= full; ++s) minors[full & ~s] = values[s];
  return FmPolynomial(n, std::move(minors));
}

/// Every principal minor, indexed by subset mask.
inline Vec all_principal_minors(const IntMatrix &m) {
  const std::size_t n = m.rows();
  if (n > max_exponential_size) throw DomainError("principal minor enumeration limited to n <= 20");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  Vec minors(full + 1);
  for (std::uint64_t s = 0; s <= full; ++s) minors[s] = principal_minor(m, s);
  return minors;
}

inline MatrixClass classify_from_minors(const Vec &minors) {
  const std::uint64_t full = minors.size() - 1;
  bool all_nonneg = true, proper_pos = true;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (minors[s] < 0) all_nonneg = false;
    if (s != full && minors[s] <= 0) proper_pos = false;
  }
  if (proper_pos && minors[full] > 0) return MatrixClass::NonsingularM;
  if (proper_pos && minors[full] >= 0) return MatrixClass::AlmostNonsingularM;
  if (all_nonneg) return MatrixClass::MMatrix;
  return MatrixClass::ZOnly;
}

/// Principal-minor characterization: M-matrix iff all minors >= 0,
/// non-singular iff all > 0, almost non-singular iff proper ones > 0 and det >= 0.
inline MatrixClass classify(const IntMatrix &m) {
  if (!m.square()) throw DomainError("classify needs a square matrix");
  if (!is_z_matrix(m)) return MatrixClass::NotZ;
  return classify_from_minors(all_principal_minors(m));
}

/// Same classification read off the f_M coefficients: non-negative for M,
/// positive for non-singular, positive except maybe the constant term for
/// almost non-singular.
inline MatrixClass classify_by_fm(const IntMatrix &m) {
  if (!m.square()) throw DomainError("classify needs a square matrix");
  if (!is_z_matrix(m)) return MatrixClass::NotZ;
  auto f = fm_coefficients(m);
  bool nonneg = true, positive_nonconstant = true;
  for (std::uint64_t mono = 0; mono <= f.full_mask(); ++mono) {
    if (f.coefficient(mono) < 0) nonneg = false;
    if (mono != 0 && f.coefficient(mono) <= 0) positive_nonconstant = false;
  }
  if (positive_nonconstant && f.constant_term() > 0) return MatrixClass::NonsingularM;
  if (positive_nonconstant && f.constant_term() >= 0) return MatrixClass::AlmostNonsingularM;
  if (nonneg) return MatrixClass::MMatrix;
  return MatrixClass::ZOnly;
}

/// For Z-matrices: non-singular M-matrix iff every leading principal minor is positive.
inline bool leading_minors_positive(const IntMatrix &m) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    idx.push_back(k);
    if (principal_minor(m, idx) <= 0) return false;
  }
  return true;
}

namespace detail {

inline std::optional<Vec> kernel_or_none(const IntMatrix &m) {
  try {
    return primitive_kernel(m);
  } catch (const KernelDimensionError &) {
    return std::nullopt;
  }
}

inline bool has_positive_kernel(const IntMatrix &m) {
  auto k = kernel_or_none(m);
  return k && all_positive(*k);
}

} // namespace detail

/// Irreducible with a strictly positive kernel vector.
inline bool almost_by_kernel(const IntMatrix &m) {
  if (!m.square() || !is_z_matrix(m)) return false;
  if (!is_irreducible(m)) return false;
  return detail::has_positive_kernel(m);
}

/// A positive kernel vector of M exists iff one of M^t exists.
inline bool transpose_duality_check(const IntMatrix &m) {
  if (!is_z_matrix(m)) throw DomainError("duality check needs a Z-matrix");
  if (!is_irreducible(m)) throw DomainError("duality check needs an irreducible matrix");
  return detail::has_positive_kernel(m) == detail::has_positive_kernel(m.transpose());
}

struct AdjointCheck {
  bool holds = false;
  BigInt order; // |K(M)|
  Vec right;    // r, M r = 0
  Vec left;     // s, M^t s = 0
};

/// adj(M) = |K(M)| r s^t for an irreducible almost non-singular M-matrix with det 0.
inline AdjointCheck adjoint_identity(const IntMatrix &m) {
  if (!m.square() || !is_z_matrix(m) || !is_irreducible(m))
    throw DomainError("adjoint identity needs an irreducible square Z-matrix");
  if (classify(m) != MatrixClass::AlmostNonsingularM || determinant(m) != 0)
    throw DomainError("adjoint identity needs an almost non-singular M-matrix with det 0");
  AdjointCheck out;
  out.right = *primitive_kernel(m);
  out.left = *primitive_kernel(m.transpose());
  out.order = critical_group_of_matrix(m).torsion_order();
  out.holds = adjugate(m) == out.order * outer(out.right, out.left);
  return out;
}

/// Borders a non-singular M-matrix M into [[r^t a, -a^t], [-a, M]] with a = M r > 0,
/// which is irreducible, almost non-singular and kills (1, r).
inline IntMatrix extend_to_singular(const IntMatrix &m) {
  if (classify(m) != MatrixClass::NonsingularM) throw DomainError("extension needs a non-singular M-matrix");
  const std::size_t n = m.rows();
  Vec r = constant_vec(n, 1);
  Vec a = m * r;
  if (!all_positive(a)) {
    // adj(M) = det(M) M^{-1} >= 0 with no zero row, so adj(M) 1 > 0 and M adj(M) 1 = det(M) 1.
    r = adjugate(m) * constant_vec(n, 1);
    BigInt g = gcd(r);
    for (auto &x : r) x /= g;
    a = m * r;
  }
  BigInt corner = 0;
  for (std::size_t i = 0; i < n; ++i) corner += a[i] * r[i];
  IntMatrix out(n + 1, n + 1);
  out(0, 0) = corner;
  for (std::size_t i = 0; i < n; ++i) {
    out(0, i + 1) = -a[i];
    out(i + 1, 0) = -a[i];
    for (std::size_t j = 0; j < n; ++j) out(i + 1, j + 1) = m(i, j);
  }
  return out;
}

using Box = std::vector<long long>;

/// alpha + (row sum of B) + 1 per coordinate.
inline Box default_box(const IntMatrix &b, long long alpha) {
  Box box(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < b.cols(); ++j) s += b(i, j);
    box[i] = alpha + static_cast<long long>(s) + 1;
  }
  return box;
}

namespace detail {

inline Box resolve_lower(const Box &lower, const Box &box) {
  if (lower.empty()) return Box(box.size(), 1);
  if (lower.size() != box.size()) throw DomainError("lower bound length does not match matrix size");
  for (std::size_t i = 0; i < box.size(); ++i)
    if (lower[i] < 1 || lower[i] > box[i]) throw DomainError("lower bounds must lie in 1..box");
  return lower;
}

inline void check_search_input(const IntMatrix &b, const Box &box) {
  if (!b.square() || b.rows() == 0) throw DomainError("B must be a non-empty square matrix");
  if (b.rows() > max_exponential_size) throw DomainError("search limited to n <= 20");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j) < 0) throw DomainError("B must be non-negative");
      if (i == j && b(i, j) != 0) throw DomainError("B must have zero diagonal");
    }
  if (box.size() != b.rows()) throw DomainError("box length does not match matrix size");
  for (auto v : box)
    if (v < 1) throw DomainError("box bounds must be >= 1");
}

/// Principal minors of diag(d)-B on subsets of [0..k] that contain k are all >= 0.
inline bool prefix_minors_nonnegative(const IntMatrix &a, std::size_t k) {
  const std::uint64_t below = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t s = 0;; s = (s - below) & below) {
    auto idx = subset_indices(s | (std::uint64_t{1} << k), a.rows());
    if (principal_minor(a, idx) < 0) return false;
    if (s == below) break;
  }
  return true;
}

inline IntMatrix with_diagonal(const IntMatrix &b, const Vec &d) {
  IntMatrix a(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a(i, j) = (i == j) ? d[i] : BigInt(-b(i, j));
  return a;
}

inline void sort_unique(std::vector<Vec> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

/// All d in the box (lower corner `lower`, default all ones) with diag(d) - B an M-matrix and det exactly alpha.
///
/// Depth-first over coordinates. A prefix is dropped once a principal minor
/// inside it goes negative. When the completion by the lower corner is already a
/// non-singular M-matrix with det > alpha, every larger d has larger det, so
/// the current coordinate loop stops.
inline std::vector<Vec> enumerate_A_alpha(const IntMatrix &b, long long alpha, const Box &box, unsigned threads = 1,
                                     const Box &lower = {}) {
  detail::check_search_input(b, box);
  const Box low = detail::resolve_lower(lower, box);
  if (alpha < 0) throw DomainError("alpha must be non-negative");
  const std::size_t n = b.rows();
  const BigInt target = alpha;

  auto search_from = [&](long long first, std::vector<Vec> &found) {
    Vec d = constant_vec(n, 1);
    IntMatrix a = detail::with_diagonal(b, d);
    auto rec = [&](auto &&self, std::size_t k) -> void {
      const long long lo = (k == 0) ? first : low[k];
      const long long hi = (k == 0) ? first : box[k];
      for (long long v = lo; v <= hi; ++v) {
        a(k, k) = v;
        // ones beyond k
        for (std::size_t j = k + 1; j < n; ++j) a(j, j) = low[j];
        if (!detail::prefix_minors_nonnegative(a, k)) continue;
        if (leading_minors_positive(a) && determinant(a) > target) break;
        if (k + 1 == n) {
          if (determinant(a) == target) {
            Vec out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
            found.push_back(std::move(out));
          }
        } else {
          self(self, k + 1);
        }
      }
    };
    rec(rec, 0);
  };

  std::vector<std::vector<Vec>> parts(static_cast<std::size_t>(box[0] - low[0] + 1));
  parallel_for(parts.size(), threads, [&](std::size_t i) { search_from(static_cast<long long>(i) + low[0], parts[i]); });
  std::vector<Vec> all;
  for (auto &p : parts) all.insert(all.end(), p.begin(), p.end());
  detail::sort_unique(all);
  return all;
}

inline bool dominated_by(const Vec &lower, const Vec &upper) {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return false;
  return true;
}

/// Coordinate-wise minimal elements of A_{>=alpha}(B) inside the box.
/// Membership is upward closed, so for each prefix only the smallest admissible
/// last coordinate can be minimal; survivors are then filtered pairwise.
inline std::vector<Vec> min_A_geq_alpha(const IntMatrix &b, long long alpha, const Box &box, unsigned threads = 1,
                                     const Box &lower = {}) {
  detail::check_search_input(b, box);
  const Box low = detail::resolve_lower(lower, box);
  if (alpha < 0) throw DomainError("alpha must be non-negative");
  const std::size_t n = b.rows();
  const BigInt target = alpha;

  auto member = [&](const IntMatrix &a) { return determinant(a) >= target; };

  auto search_from = [&](long long first, std::vector<Vec> &found) {
    IntMatrix a = detail::with_diagonal(b, constant_vec(n, 1));
    auto rec = [&](auto &&self, std::size_t k) -> void {
      const long long lo = (k == 0) ? first : low[k];
      const long long hi = (k == 0) ? first : box[k];
      for (long long v = lo; v <= hi; ++v) {
        a(k, k) = v;
        for (std::size_t j = k + 1; j < n; ++j) a(j, j) = low[j];
        if (!detail::prefix_minors_nonnegative(a, k)) continue;
        if (k + 1 == n) {
          if (member(a)) {
            Vec out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
            found.push_back(std::move(out));
            break;
          }
          continue;
        }
        // Completion by the lower corner is a member: larger values here are dominated.
        bool ones_member = classify(a) >= MatrixClass::MMatrix && member(a);
        self(self, k + 1);
        if (ones_member) break;
      }
    };
    rec(rec, 0);
  };

  std::vector<std::vector<Vec>> parts(static_cast<std::size_t>(box[0] - low[0] + 1));
  parallel_for(parts.size(), threads, [&](std::size_t i) { search_from(static_cast<long long>(i) + low[0], parts[i]); });
  std::vector<Vec> cand;
  for (auto &p : parts) cand.insert(cand.end(), p.begin(), p.end());
  detail::sort_unique(cand);

  std::vector<Vec> minimal;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < cand.size() && keep; ++j)
      if (i != j && dominated_by(cand[j], cand[i])) keep = false;
    if (keep) minimal.push_back(cand[i]);
  }
  return minimal;
}

} // namespace arithlab
