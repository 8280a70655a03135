#pragma once

#include "arithlab/bigint.hpp"
#include "arithlab/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arithlab {

using Multiplicity = std::int64_t;

/// Loopless multidigraph stored as a dense arc-multiplicity matrix.
/// mult(u, v) is the number of arcs u -> v. Vertices are 0-indexed.
class Multidigraph {
public:
  explicit Multidigraph(Matrix<Multiplicity> mult, std::vector<std::string> labels = {})
      : mult_(std::move(mult)), labels_(std::move(labels)) {
    if (!mult_.square() || mult_.rows() == 0) throw DomainError("graph needs a non-empty square multiplicity matrix");
    for (std::size_t u = 0; u < n(); ++u) {
      if (mult_(u, u) != 0) throw DomainError("loop arc at vertex " + std::to_string(u + 1));
      for (std::size_t v = 0; v < n(); ++v)
        if (mult_(u, v) < 0) throw DomainError("negative multiplicity");
    }
    if (!labels_.empty() && labels_.size() != n()) throw DomainError("label count does not match vertex count");
  }

  static Multidigraph empty(std::size_t n) { return Multidigraph(Matrix<Multiplicity>(n, n)); }

  std::size_t n() const { return mult_.rows(); }
  Multiplicity mult(std::size_t u, std::size_t v) const { return mult_(u, v); }
  const Matrix<Multiplicity> &multiplicities() const { return mult_; }
  const std::vector<std::string> &labels() const { return labels_; }

  bool symmetric() const { return mult_ == mult_.transpose(); }

  Multiplicity out_degree(std::size_t u) const {
    Multiplicity s = 0;
    for (std::size_t v = 0; v < n(); ++v) s += mult_(u, v);
    return s;
  }

  std::vector<std::size_t> out_neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n(); ++v)
      if (mult_(u, v) > 0) out.push_back(v);
    return out;
  }

  /// -L(G, 0).
  IntMatrix adjacency() const {
    IntMatrix a(n(), n());
    for (std::size_t u = 0; u < n(); ++u)
      for (std::size_t v = 0; v < n(); ++v) a(u, v) = mult_(u, v);
    return a;
  }

  friend bool operator==(const Multidigraph &a, const Multidigraph &b) {
    return a.mult_ == b.mult_ && a.labels_ == b.labels_;
  }

private:
  Matrix<Multiplicity> mult_;
  std::vector<std::string> labels_;
};

/// Builder for undirected multigraphs; each edge adds one arc in each direction.
class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t n) : m_(n, n) {}
  GraphBuilder &edge(std::size_t u, std::size_t v, Multiplicity k = 1) {
    m_(u, v) += k;
    m_(v, u) += k;
    return *this;
  }
  GraphBuilder &arc(std::size_t u, std::size_t v, Multiplicity k = 1) {
    m_(u, v) += k;
    return *this;
  }
  Multidigraph build() const { return Multidigraph(m_); }

private:
  Matrix<Multiplicity> m_;
};

inline Multidigraph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.edge(i, i + 1);
  return b.build();
}

/// C_n for n >= 3; C_2 is the two-vertex multigraph with a doubled edge.
inline Multidigraph cycle_graph(std::size_t n) {
  if (n < 2) throw DomainError("cycle needs at least two vertices");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.edge(i, (i + 1) % n);
  return b.build();
}

inline Multidigraph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.edge(i, j);
  return b.build();
}

/// Star with center 0 and leaves 1..k.
inline Multidigraph star_graph(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) b.edge(0, i);
  return b.build();
}

/// Out-degree vector (row sums of the multiplicity matrix).
inline Vec degree_vector(const Multidigraph &g) {
  Vec d(g.n());
  for (std::size_t u = 0; u < g.n(); ++u) d[u] = g.out_degree(u);
  return d;
}

/// diag(d) - mult(G).
inline IntMatrix laplacian(const Multidigraph &g, const Vec &d) {
  if (d.size() != g.n())
    throw DomainError("diagonal has length " + std::to_string(d.size()) + ", graph has " +
                      std::to_string(g.n()) + " vertices");
  IntMatrix l(g.n(), g.n());
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = 0; v < g.n(); ++v) l(u, v) = (u == v) ? d[u] : BigInt(-g.mult(u, v));
  return l;
}

namespace detail {

/// Tarjan's algorithm over a 0/1 adjacency predicate; returns component ids.
template <typename Adjacent>
std::vector<std::size_t> scc_ids(std::size_t n, Adjacent &&adjacent, std::size_t &count) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t next = 0;
  count = 0;

  // Iterative DFS: frames hold (vertex, next neighbor to try).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto &[v, w] = frames.back();
      if (w < n) {
        std::size_t to = w++;
        if (to == v || !adjacent(v, to)) continue;
        if (index[to] == unvisited) {
          index[to] = low[to] = next++;
          stack.push_back(to);
          on_stack[to] = true;
          frames.emplace_back(to, 0);
        } else if (on_stack[to]) {
          low[v] = std::min(low[v], index[to]);
        }
        continue;
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          comp[x] = count;
        } while (x != done);
        ++count;
      }
    }
  }
  return comp;
}

} // namespace detail

inline bool is_strongly_connected(const Multidigraph &g) {
  std::size_t count = 0;
  detail::scc_ids(g.n(), [&](std::size_t u, std::size_t v) { return g.mult(u, v) > 0; }, count);
  return count == 1;
}

/// True iff the support digraph (u -> v whenever M(u,v) != 0, u != v) is strongly connected.
template <typename T> bool is_irreducible(const Matrix<T> &m) {
  if (!m.square()) throw DomainError("irreducibility needs a square matrix");
  if (m.rows() == 0) return true;
  std::size_t count = 0;
  detail::scc_ids(m.rows(), [&](std::size_t u, std::size_t v) { return m(u, v) != 0; }, count);
  return count == 1;
}

/// Undirected connectivity of the symmetrized support.
inline bool is_weakly_connected(const Multidigraph &g) {
  std::vector<bool> seen(g.n(), false);
  std::vector<std::size_t> todo{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    std::size_t u = todo.back();
    todo.pop_back();
    for (std::size_t v = 0; v < g.n(); ++v)
      if (!seen[v] && (g.mult(u, v) > 0 || g.mult(v, u) > 0)) {
        seen[v] = true;
        ++reached;
        todo.push_back(v);
      }
  }
  return reached == g.n();
}

} // namespace arithlab
