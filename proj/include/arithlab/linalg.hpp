#pragma once

#include "arithlab/bigint.hpp"
#include "arithlab/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace arithlab {

using Rational = boost::multiprecision::cpp_rational;

/// Thrown by primitive_kernel when the rational kernel has dimension > 1.
class KernelDimensionError : public DomainError {
public:
  KernelDimensionError() : DomainError("kernel dimension > 1") {}
};

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Every intermediate division is exact, so T must be an exact integer type.
template <typename T> T determinant(Matrix<T> a) {
  if (!a.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return T(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// det(M[I;I]); the empty minor is 1.
template <typename T> T principal_minor(const Matrix<T> &m, const std::vector<std::size_t> &idx) {
  if (!m.square()) throw DomainError("principal minor of a non-square matrix");
  for (auto i : idx)
    if (i >= m.rows()) throw DomainError("principal minor index out of range");
  return determinant(m.principal(idx));
}

/// Indices whose bit is set in `mask`.
inline std::vector<std::size_t> subset_indices(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) idx.push_back(i);
  return idx;
}

template <typename T> T principal_minor(const Matrix<T> &m, std::uint64_t mask) {
  return principal_minor(m, subset_indices(mask, m.rows()));
}

/// Classical adjugate via cofactors; M * adj(M) = det(M) * I.
template <typename T> Matrix<T> adjugate(const Matrix<T> &m) {
  if (!m.square() || m.rows() == 0) throw DomainError("adjugate needs a non-empty square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  std::vector<std::size_t> ri, ci;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ri.clear();
      ci.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) ri.push_back(k);
        if (k != i) ci.push_back(k);
      }
      T c = determinant(m.submatrix(ri, ci));
      adj(i, j) = ((i + j) % 2 == 0) ? c : T(-c);
    }
  }
  return adj;
}

namespace detail {

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix<Rational> &a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Matrix<Rational> to_rational(const IntMatrix &m) {
  Matrix<Rational> q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

} // namespace detail

inline std::size_t rank(const IntMatrix &m) {
  auto q = detail::to_rational(m);
  return detail::rref(q).size();
}

/// Scales a nonzero rational vector to a primitive integer vector whose
/// first nonzero entry is positive.
inline Vec primitive_integer_vector(const std::vector<Rational> &v) {
  BigInt den = 1;
  for (const auto &x : v) den = lcm(den, boost::multiprecision::denominator(x));
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = boost::multiprecision::numerator(v[i]) * (den / boost::multiprecision::denominator(v[i]));
  BigInt g = gcd(out);
  if (g == 0) throw DomainError("zero vector has no primitive form");
  for (auto &x : out) x /= g;
  for (const auto &x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto &y : out) y = -y;
    break;
  }
  return out;
}

/// Generator of ker_Q(M) when it is one-dimensional, normalized to gcd 1 with
/// the first nonzero entry positive. Returns nullopt when M has full column
/// rank and throws KernelDimensionError when the kernel is larger.
inline std::optional<Vec> primitive_kernel(const IntMatrix &m) {
  if (!m.square()) throw DomainError("primitive kernel expects a square matrix");
  auto q = detail::to_rational(m);
  auto pivots = detail::rref(q);
  const std::size_t n = m.cols();
  if (pivots.size() == n) return std::nullopt;
  if (pivots.size() + 1 < n) throw KernelDimensionError();

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> v(n, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -q(r, free_col);
  return primitive_integer_vector(v);
}

} // namespace arithlab
