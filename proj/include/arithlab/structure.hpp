#pragma once

#include "arithlab/bigint.hpp"
#include "arithlab/graph.hpp"
#include "arithlab/linalg.hpp"
#include "arithlab/matrix.hpp"
#include "arithlab/smith.hpp"

#include <optional>
#include <string>
#include <utility>

namespace arithlab {

/// Pair (d, r) with L(G,d) r = 0, both positive, gcd(r) = 1.
struct ArithStructure {
  Vec d;
  Vec r;

  friend bool operator==(const ArithStructure &, const ArithStructure &) = default;
  friend auto operator<=>(const ArithStructure &a, const ArithStructure &b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return a.r <=> b.r;
  }
};

/// A graph together with a structure on it.
struct GraphStructure {
  Multidigraph graph;
  ArithStructure s;
};

struct Verdict {
  bool ok = false;
  std::string diagnostic; // first violated condition, empty when ok

  explicit operator bool() const { return ok; }
};

namespace detail {

inline Verdict check_pair(const IntMatrix &l, const Vec &d, const Vec &r) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] <= 0) return {false, "d_" + std::to_string(i + 1) + " = " + d[i].str() + " is not positive"};
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] <= 0) return {false, "r_" + std::to_string(i + 1) + " = " + r[i].str() + " is not positive"};
  if (BigInt g = gcd(r); g != 1) return {false, "gcd(r) = " + g.str()};
  Vec lr = l * r;
  for (std::size_t i = 0; i < lr.size(); ++i)
    if (lr[i] != 0) return {false, "(L r)_" + std::to_string(i + 1) + " = " + lr[i].str()};
  return {true, {}};
}

} // namespace detail

inline Verdict verify(const Multidigraph &g, const Vec &d, const Vec &r) {
  if (d.size() != g.n() || r.size() != g.n())
    throw DomainError("structure length does not match the " + std::to_string(g.n()) + " vertices");
  return detail::check_pair(laplacian(g, d), d, r);
}

inline Verdict verify(const Multidigraph &g, const ArithStructure &s) { return verify(g, s.d, s.r); }

/// Same checks against diag(d) - B for an arbitrary square integer B.
inline Verdict verify_matrix(const IntMatrix &b, const Vec &d, const Vec &r) {
  if (!b.square() || d.size() != b.rows() || r.size() != b.rows())
    throw DomainError("structure length does not match the matrix size");
  IntMatrix l(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) l(i, j) = (i == j) ? BigInt(d[i] - b(i, i)) : BigInt(-b(i, j));
  return detail::check_pair(l, d, r);
}

/// d_u = (sum_v m(u,v) r_v) / r_u when every quotient is a positive integer.
inline std::optional<Vec> recover_d(const Multidigraph &g, const Vec &r) {
  if (r.size() != g.n()) throw DomainError("r length does not match vertex count");
  Vec d(g.n());
  for (std::size_t u = 0; u < g.n(); ++u) {
    if (r[u] <= 0) return std::nullopt;
    BigInt s = 0;
    for (std::size_t v = 0; v < g.n(); ++v) s += g.mult(u, v) * r[v];
    if (s % r[u] != 0 || s == 0) return std::nullopt;
    d[u] = s / r[u];
  }
  return d;
}

/// Torsion of coker L(G,d). Checks rank n-1 and the cofactor identity
/// adj(L) = m r s^t (s = r when G is symmetric).
inline AbelianGroup critical_group(const Multidigraph &g, const Vec &d, const Vec &r) {
  if (auto v = verify(g, d, r); !v) throw DomainError("not an arithmetical structure: " + v.diagnostic);
  if (!is_strongly_connected(g)) throw DomainError("graph is not strongly connected");
  IntMatrix l = laplacian(g, d);
  AbelianGroup grp = smith_normal_form(l).cokernel;
  if (grp.free_rank != 1) throw DomainError("Laplacian rank is not n-1");
  grp.free_rank = 0;
  Vec s = g.symmetric() ? r : *primitive_kernel(l.transpose());
  if (adjugate(l) != grp.torsion_order() * outer(r, s)) throw DomainError("cofactor identity fails");
  return grp;
}

inline AbelianGroup critical_group(const Multidigraph &g, const ArithStructure &s) { return critical_group(g, s.d, s.r); }

/// Cone c(G): new apex at index 0 joined by one edge to every vertex.
inline Multidigraph cone_graph(const Multidigraph &g) {
  const std::size_t n = g.n();
  Matrix<Multiplicity> m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    m(0, i + 1) = m(i + 1, 0) = 1;
    for (std::size_t j = 0; j < n; ++j) m(i + 1, j + 1) = g.mult(i, j);
  }
  return Multidigraph(std::move(m));
}

/// Apex gets (n/f, f), every other vertex (t+f, 1).
inline GraphStructure cone_regular(const Multidigraph &g, long long f) {
  if (!g.symmetric()) throw DomainError("cone needs an undirected graph");
  const std::size_t n = g.n();
  const Multiplicity t = g.out_degree(0);
  for (std::size_t u = 1; u < n; ++u)
    if (g.out_degree(u) != t) throw DomainError("graph is not regular");
  if (f <= 0 || static_cast<long long>(n) % f != 0) throw DomainError("f must divide the vertex count");
  ArithStructure s;
  s.d = constant_vec(n + 1, t + f);
  s.r = constant_vec(n + 1, 1);
  s.d[0] = static_cast<long long>(n) / f;
  s.r[0] = f;
  return {cone_graph(g), std::move(s)};
}

/// For L(G,d) r = a 1 with a | sum(r): apex (sum(r)/a, a/g), others (d, r/g), g = gcd(a, r).
inline GraphStructure cone_general(const Multidigraph &g, const Vec &d, const Vec &r, const BigInt &a) {
  if (!g.symmetric()) throw DomainError("cone needs an undirected graph");
  if (d.size() != g.n() || r.size() != g.n()) throw DomainError("structure length does not match vertex count");
  if (a <= 0) throw DomainError("a must be positive");
  if (!all_positive(d) || !all_positive(r)) throw DomainError("d and r must be positive");
  Vec lr = laplacian(g, d) * r;
  for (const auto &x : lr)
    if (x != a) throw DomainError("L(G,d) r is not a times the all-ones vector");
  BigInt total = sum(r);
  if (total % a != 0) throw DomainError("a does not divide the sum of r");
  BigInt gg = gcd(a, gcd(r));
  ArithStructure s;
  s.d.push_back(total / a);
  s.r.push_back(a / gg);
  for (std::size_t i = 0; i < g.n(); ++i) {
    s.d.push_back(d[i]);
    s.r.push_back(r[i] / gg);
  }
  return {cone_graph(g), std::move(s)};
}

} // namespace arithlab
