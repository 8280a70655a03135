#pragma once

// Structure-preserving graph operations. Apart from blowup these accept
// undirected graphs only (symmetric multiplicity matrix) and check their
// input structure first.

#include "arithlab/bigint.hpp"
#include "arithlab/graph.hpp"
#include "arithlab/matrix.hpp"
#include "arithlab/smith.hpp"
#include "arithlab/structure.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace arithlab {

namespace detail {

inline void require_graph_structure(const Multidigraph &g, const ArithStructure &s) {
  if (!g.symmetric()) throw DomainError("operation needs an undirected graph");
  if (auto v = verify(g, s); !v) throw DomainError("input is not an arithmetical structure: " + v.diagnostic);
}

inline void require_vertex(const Multidigraph &g, std::size_t v) {
  if (v >= g.n()) throw DomainError("vertex " + std::to_string(v + 1) + " out of range");
}

/// Appends `extra`, primed until it differs from every existing label.
inline std::vector<std::string> extend_labels(const Multidigraph &g, std::string extra) {
  auto labels = g.labels();
  if (labels.empty()) return labels;
  while (std::find(labels.begin(), labels.end(), extra) != labels.end()) extra += "'";
  labels.push_back(extra);
  return labels;
}

/// Copy of g with one extra isolated vertex appended.
inline Matrix<Multiplicity> grown(const Multidigraph &g) {
  Matrix<Multiplicity> m(g.n() + 1, g.n() + 1);
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) m(i, j) = g.mult(i, j);
  return m;
}

} // namespace detail

/// Identifies non-adjacent u, u2 with r_u = r_u2 into w (kept at u's index).
inline GraphStructure merge(const Multidigraph &g, std::size_t u, std::size_t u2, const ArithStructure &s) {
  detail::require_graph_structure(g, s);
  detail::require_vertex(g, u);
  detail::require_vertex(g, u2);
  if (u == u2) throw DomainError("merge needs two distinct vertices");
  if (s.r[u] != s.r[u2]) throw DomainError("merge needs r_u = r_u'");
  if (g.mult(u, u2) != 0) throw DomainError("merge needs non-adjacent vertices");

  const std::size_t n = g.n();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != u2) keep.push_back(i);
  auto fold = [&](std::size_t i) { return i == u2 ? u : i; };

  Matrix<Multiplicity> m(n - 1, n - 1);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a == b) continue;
      Multiplicity total = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (fold(i) == keep[a] && fold(j) == keep[b]) total += g.mult(i, j);
      m(a, b) = total;
    }
  std::vector<std::string> labels;
  for (auto i : keep)
    if (!g.labels().empty()) labels.push_back(g.labels()[i]);

  ArithStructure out;
  for (auto i : keep) {
    out.d.push_back(i == u ? BigInt(s.d[u] + s.d[u2]) : s.d[i]);
    out.r.push_back(s.r[i]);
  }
  return {Multidigraph(std::move(m), std::move(labels)), std::move(out)};
}

/// Replaces u by w (keeps u's index, takes the edges listed in `moved`) and a
/// new last vertex w2 (the remaining edges of u). `moved` lists neighbours of
/// u, one entry per parallel edge taken; w and w2 are not adjacent.
inline GraphStructure split(const Multidigraph &g, std::size_t u, const std::vector<std::size_t> &moved,
                            const ArithStructure &s) {
  detail::require_graph_structure(g, s);
  detail::require_vertex(g, u);
  std::vector<Multiplicity> take(g.n(), 0);
  for (auto a : moved) {
    detail::require_vertex(g, a);
    if (++take[a] > g.mult(u, a))
      throw DomainError("vertex " + std::to_string(a + 1) + " is not a neighbour of " + std::to_string(u + 1) +
                        " often enough");
  }
  const Multiplicity moved_count = static_cast<Multiplicity>(moved.size());
  if (moved_count == 0 || moved_count == g.out_degree(u))
    throw DomainError("split needs a proper nonempty part of the neighbourhood");

  BigInt part = 0;
  for (auto a : moved) part += s.r[a];
  if (part % s.r[u] != 0) throw DomainError("r_u does not divide the sum of r over the chosen part");
  BigInt rest = s.d[u] * s.r[u] - part;

  const std::size_t n = g.n();
  auto m = detail::grown(g);
  for (std::size_t a = 0; a < n; ++a) {
    Multiplicity other = g.mult(u, a) - take[a];
    m(u, a) = m(a, u) = take[a];
    m(n, a) = m(a, n) = other;
  }
  ArithStructure out = s;
  out.d[u] = part / s.r[u];
  out.d.push_back(rest / s.r[u]);
  out.r.push_back(s.r[u]);
  std::string label = g.labels().empty() ? "" : g.labels()[u] + "'";
  return {Multidigraph(std::move(m), detail::extend_labels(g, label)), std::move(out)};
}

/// Deletes the edges inside clique C and joins a new last vertex to C.
inline GraphStructure clique_star(const Multidigraph &g, const std::vector<std::size_t> &clique,
                                  const ArithStructure &s) {
  detail::require_graph_structure(g, s);
  if (clique.empty()) throw DomainError("clique must be nonempty");
  std::set<std::size_t> seen;
  for (auto v : clique) {
    detail::require_vertex(g, v);
    if (!seen.insert(v).second) throw DomainError("clique lists a vertex twice");
  }
  for (auto a : clique)
    for (auto b : clique) {
      if (a == b) continue;
      if (g.mult(a, b) == 0) throw DomainError("vertices are not pairwise adjacent");
      if (g.mult(a, b) > 1) throw DomainError("multiple edges inside the clique");
    }

  const std::size_t n = g.n();
  auto m = detail::grown(g);
  ArithStructure out = s;
  BigInt center = 0;
  for (auto a : clique) {
    for (auto b : clique)
      if (a != b) m(a, b) = 0;
    m(a, n) = m(n, a) = 1;
    out.d[a] += 1;
    center += s.r[a];
  }
  out.d.push_back(1);
  out.r.push_back(center);
  return {Multidigraph(std::move(m), detail::extend_labels(g, "c")), std::move(out)};
}

/// New leaf appended at v.
inline GraphStructure add_pendant(const Multidigraph &g, std::size_t v, const ArithStructure &s) {
  detail::require_graph_structure(g, s);
  detail::require_vertex(g, v);
  const std::size_t n = g.n();
  auto m = detail::grown(g);
  m(v, n) = m(n, v) = 1;
  ArithStructure out = s;
  out.d[v] += 1;
  out.d.push_back(1);
  out.r.push_back(s.r[v]);
  return {Multidigraph(std::move(m), detail::extend_labels(g, "p")), std::move(out)};
}

/// Replaces one copy of the edge u1 u2 by a path through a new last vertex.
inline GraphStructure subdivide_edge(const Multidigraph &g, std::size_t u1, std::size_t u2, const ArithStructure &s) {
  detail::require_graph_structure(g, s);
  detail::require_vertex(g, u1);
  detail::require_vertex(g, u2);
  if (u1 == u2 || g.mult(u1, u2) == 0) throw DomainError("not an edge");
  const std::size_t n = g.n();
  auto m = detail::grown(g);
  m(u1, u2) -= 1;
  m(u2, u1) -= 1;
  m(u1, n) = m(n, u1) = 1;
  m(u2, n) = m(n, u2) = 1;
  ArithStructure out = s;
  out.d[u1] += 1;
  out.d[u2] += 1;
  out.d.push_back(1);
  out.r.push_back(s.r[u1] + s.r[u2]);
  return {Multidigraph(std::move(m), detail::extend_labels(g, "s")), std::move(out)};
}

struct BlowupResult {
  IntMatrix matrix; // new vertex at index 0; may hold negative entries when g > 1
  ArithStructure s;
};

/// Bordered matrix with row 0 = q, column 0 = p and M_ij - p_i q_j / g off
/// the diagonal; d~ = (g, d_i + p_i q_i / g), r~ = (sum_j q_j r_j / g, r).
inline BlowupResult blowup(const IntMatrix &mat, const Vec &p, const Vec &q, const ArithStructure &s) {
  const std::size_t n = mat.rows();
  if (!mat.square() || n == 0) throw DomainError("blowup needs a non-empty square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mat(i, j) < 0) throw DomainError("blowup needs a non-negative matrix");
      if (i == j && mat(i, j) != 0) throw DomainError("blowup needs a zero diagonal");
    }
  if (p.size() != n || q.size() != n) throw DomainError("p and q must have one entry per vertex");
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] < 0 || q[i] < 0) throw DomainError("p and q must be non-negative");
  if (is_zero(p) || is_zero(q)) throw DomainError("p and q must be nonzero");
  if (auto v = verify_matrix(mat, s.d, s.r); !v) throw DomainError("input is not an arithmetical structure: " + v.diagnostic);

  Vec pq = p;
  pq.insert(pq.end(), q.begin(), q.end());
  const BigInt g = gcd(pq);

  BlowupResult out{IntMatrix(n + 1, n + 1), {}};
  BigInt r0 = 0;
  for (std::size_t j = 0; j < n; ++j) r0 += q[j] * s.r[j];
  out.s.d.push_back(g);
  out.s.r.push_back(r0 / g);
  for (std::size_t i = 0; i < n; ++i) {
    out.matrix(0, i + 1) = q[i];
    out.matrix(i + 1, 0) = p[i];
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.matrix(i + 1, j + 1) = mat(i, j) - p[i] * q[j] / g;
    out.s.d.push_back(s.d[i] + p[i] * q[i] / g);
    out.s.r.push_back(s.r[i]);
  }
  return out;
}

/// Torsion of coker(diag(d) - M) before and after a blowup with g = 1.
inline bool blowup_critical_invariance(const IntMatrix &mat, const Vec &p, const Vec &q, const ArithStructure &s) {
  Vec pq = p;
  pq.insert(pq.end(), q.begin(), q.end());
  if (gcd(pq) != 1) throw DomainError("critical group invariance needs gcd(p, q) = 1");
  auto b = blowup(mat, p, q, s);
  auto lap = [](const IntMatrix &m, const Vec &d) {
    IntMatrix l(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) l(i, j) = (i == j) ? d[i] : BigInt(-m(i, j));
    return l;
  };
  return critical_group_of_matrix(lap(mat, s.d)) == critical_group_of_matrix(lap(b.matrix, b.s.d));
}

} // namespace arithlab
