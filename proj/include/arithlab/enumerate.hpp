#pragma once

#include "arithlab/bigint.hpp"
#include "arithlab/graph.hpp"
#include "arithlab/linalg.hpp"
#include "arithlab/mclass.hpp"
#include "arithlab/parallel.hpp"
#include "arithlab/structure.hpp"
#include "arithlab/transforms.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace arithlab {

/// A zero-valued vertex whose degree is not 2, or a walk that never leaves zeros.
class WNotWellDefined : public DomainError {
public:
  using DomainError::DomainError;
};

class InvalidOrder : public DomainError {
public:
  using DomainError::DomainError;
};

using VertexOrder = std::vector<std::size_t>;
using StructureSet = std::set<ArithStructure>;

namespace detail {

/// Sum of r over the nearest nonzero vertices seen from u, one term per incident edge.
inline BigInt walk_sum(const Multidigraph &g, const Vec &r, std::size_t u) {
  BigInt total = 0;
  for (std::size_t a = 0; a < g.n(); ++a) {
    const Multiplicity m = g.mult(u, a);
    if (m == 0) continue;
    for (Multiplicity copy = 0; copy < m; ++copy) {
      std::size_t prev = u, cur = a;
      // Which parallel copy of prev-cur we arrived on matters only when both copies lead back.
      std::size_t steps = 0;
      while (r[cur] == 0) {
        if (cur == u || ++steps > g.n()) throw WNotWellDefined("walk from vertex " + std::to_string(u + 1) + " returns to itself");
        std::size_t next = g.n();
        if (g.mult(cur, prev) == 2) {
          next = prev;
        } else {
          for (std::size_t b = 0; b < g.n(); ++b)
            if (b != prev && g.mult(cur, b) > 0) next = b;
        }
        prev = cur;
        cur = next;
      }
      if (cur == u) throw WNotWellDefined("walk from vertex " + std::to_string(u + 1) + " returns to itself");
      total += r[cur];
    }
  }
  return total;
}

} // namespace detail

/// Processes the zero vertices of r0 in the order theta, giving each the sum of
/// r over the nearest nonzero vertices reachable through zero-valued vertices.
inline Vec algo_r(const Multidigraph &g, const Vec &r0, const VertexOrder &theta) {
  if (!g.symmetric()) throw DomainError("algorithm needs an undirected graph");
  if (r0.size() != g.n()) throw DomainError("seed length does not match vertex count");
  bool any_nonzero = false;
  for (const auto &x : r0) {
    if (x < 0) throw DomainError("seed entries must be non-negative");
    if (x != 0) any_nonzero = true;
  }
  if (!any_nonzero) throw DomainError("seed must have nonempty support");

  std::vector<bool> listed(g.n(), false);
  for (auto v : theta) {
    if (v >= g.n()) throw InvalidOrder("order lists vertex " + std::to_string(v + 1) + " out of range");
    if (listed[v]) throw InvalidOrder("order repeats vertex " + std::to_string(v + 1));
    if (r0[v] != 0) throw InvalidOrder("order lists vertex " + std::to_string(v + 1) + " with nonzero seed");
    listed[v] = true;
  }
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (r0[v] != 0) continue;
    if (!listed[v]) throw InvalidOrder("order misses zero vertex " + std::to_string(v + 1));
    if (g.out_degree(v) != 2) throw WNotWellDefined("zero vertex " + std::to_string(v + 1) + " does not have degree 2");
  }

  Vec r = r0;
  for (auto u : theta) r[u] = detail::walk_sum(g, r, u);
  return r;
}

namespace detail {

/// Runs algo_r on every order of the zero set of r0 and collects verified structures.
inline void collect_orders(const Multidigraph &g, const Vec &r0, StructureSet &out) {
  VertexOrder zeros;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (r0[v] == 0) zeros.push_back(v);
  do {
    Vec r = algo_r(g, r0, zeros);
    BigInt gg = gcd(r);
    for (auto &x : r) x /= gg;
    auto d = recover_d(g, r);
    if (!d) continue;
    ArithStructure s{std::move(*d), std::move(r)};
    if (verify(g, s)) out.insert(std::move(s));
  } while (std::next_permutation(zeros.begin(), zeros.end()));
}

/// Seeds are the characteristic vectors of the masks accepted by `use`.
template <typename Accept>
StructureSet enumerate_by_seeds(const Multidigraph &g, Accept &&use, unsigned threads) {
  const std::size_t n = g.n();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<StructureSet> parts(count);
  parallel_for(count, threads, [&](std::size_t mask) {
    if (!use(mask)) return;
    Vec r0(n);
    for (std::size_t v = 0; v < n; ++v) r0[v] = (mask >> v & 1u) ? 1 : 0;
    collect_orders(g, r0, parts[mask]);
  });
  StructureSet all;
  for (auto &p : parts) all.merge(p);
  return all;
}

} // namespace detail

/// A(P_n): seeds containing both end vertices, every order of the rest.
inline StructureSet enumerate_path(std::size_t n, unsigned threads = 1) {
  if (n < 2) throw DomainError("path enumeration needs n >= 2");
  if (n > 24) throw DomainError("path enumeration limited to n <= 24");
  const std::uint64_t ends = 1u | (std::uint64_t{1} << (n - 1));
  return detail::enumerate_by_seeds(path_graph(n), [&](std::uint64_t m) { return (m & ends) == ends; }, threads);
}

/// A(C_n): every nonempty seed, every order of the rest. C_2 is the doubled edge.
inline StructureSet enumerate_cycle(std::size_t n, unsigned threads = 1) {
  if (n < 2) throw DomainError("cycle enumeration needs n >= 2");
  if (n > 24) throw DomainError("cycle enumeration limited to n <= 24");
  return detail::enumerate_by_seeds(cycle_graph(n), [](std::uint64_t m) { return m != 0; }, threads);
}

inline BigInt count_path(unsigned n) {
  if (n < 1) throw DomainError("count_path needs n >= 1");
  return catalan(n - 1);
}

inline BigInt count_cycle(unsigned n) {
  if (n < 1) throw DomainError("count_cycle needs n >= 1");
  return binomial(2 * n - 1, n - 1);
}

namespace detail {

inline BigInt ceil_div(const BigInt &a, const BigInt &b) { return (a + b - 1) / b; }

/// Non-decreasing tuples x >= min_x with sum 1/x_i = target (exact).
/// Greedy bound: with k terms left and remainder rho, x lies in [1/rho, k/rho].
inline void unit_fractions(const Rational &rho, std::size_t k, const BigInt &lo, const BigInt &cap, Vec &cur,
                           std::vector<Vec> &out) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt num = numerator(rho), den = denominator(rho);
  if (k == 1) {
    if (num == 1 && den >= lo && (cap == 0 || den <= cap)) {
      cur.push_back(den);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  BigInt start = std::max(lo, ceil_div(den, num));
  BigInt stop = BigInt(k) * den / num;
  if (cap != 0) stop = std::min(stop, cap);
  for (BigInt x = start; x <= stop; ++x) {
    Rational rest = rho - Rational(1) / Rational(x);
    if (rest <= 0) continue;
    cur.push_back(x);
    unit_fractions(rest, k - 1, x, cap, cur, out);
    cur.pop_back();
  }
}

} // namespace detail

/// Sorted tuples x_1 <= ... <= x_k, x_i >= min_x, with sum 1/x_i = target.
inline std::vector<Vec> unit_fraction_tuples(std::size_t k, const Rational &target, long long min_x = 1,
                                             long long cap = 0) {
  if (k == 0) throw DomainError("need at least one term");
  std::vector<Vec> out;
  Vec cur;
  detail::unit_fractions(target, k, BigInt(min_x), BigInt(cap), cur, out);
  return out;
}

/// A(K_n) from ordered solutions of sum 1/x_i = 1, x_i >= 2: d = x - 1, r = lcm(x)/x.
/// `cap` (0 = none) limits the largest denominator explored.
inline StructureSet enumerate_complete(std::size_t n, long long cap = 0, unsigned threads = 1) {
  if (n < 2) throw DomainError("complete graph enumeration needs n >= 2");
  auto tuples = unit_fraction_tuples(n, Rational(1), 2, cap);
  std::vector<StructureSet> parts(tuples.size());
  parallel_for(tuples.size(), threads, [&](std::size_t i) {
    Vec x = tuples[i];
    do {
      BigInt l = 1;
      for (const auto &v : x) l = lcm(l, v);
      ArithStructure s;
      for (const auto &v : x) {
        s.d.push_back(v - 1);
        s.r.push_back(l / v);
      }
      parts[i].insert(std::move(s));
    } while (std::next_permutation(x.begin(), x.end()));
  });
  StructureSet all;
  for (auto &p : parts) all.merge(p);
  return all;
}

/// Every structure with d inside the box, by a pruned search over d.
///
/// Prefixes must keep their leading principal minors positive (proper minors
/// of an almost non-singular M-matrix are positive). When the completion by
/// ones is already a non-singular M-matrix, larger values only raise det, so
/// the coordinate loop stops. The last coordinate enters det linearly and is
/// solved directly.
inline StructureSet enumerate_bounded(const Multidigraph &g, const Box &box, unsigned threads = 1) {
  if (!is_strongly_connected(g)) throw DomainError("graph is not strongly connected: A(G) is infinite");
  const std::size_t n = g.n();
  if (box.size() != n) throw DomainError("box length does not match vertex count");
  for (auto b : box)
    if (b < 1) throw DomainError("box bounds must be >= 1");
  if (n > max_exponential_size) throw DomainError("bounded enumeration limited to n <= 20");

  auto accept = [&](const IntMatrix &l, StructureSet &found) {
    if (classify(l) != MatrixClass::AlmostNonsingularM) return;
    std::optional<Vec> r;
    try {
      r = primitive_kernel(l);
    } catch (const KernelDimensionError &) {
      return;
    }
    if (!r || !all_positive(*r)) return;
    Vec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = l(i, i);
    found.insert({std::move(d), std::move(*r)});
  };

  auto leading = [](const IntMatrix &l, std::size_t size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    return determinant(l.principal(idx));
  };

  auto search_from = [&](long long first, StructureSet &found) {
    IntMatrix l = laplacian(g, constant_vec(n, 1));
    if (n == 1) {
      l(0, 0) = first;
      if (determinant(l) == 0) accept(l, found);
      return;
    }
    auto rec = [&](auto &&self, std::size_t k) -> void {
      if (k + 1 == n) {
        // det = d_n c1 + c0 with c1 the leading minor of size n-1 (> 0 here).
        l(k, k) = 0;
        BigInt c0 = determinant(l);
        BigInt c1 = leading(l, n - 1);
        if (c1 <= 0 || c0 >= 0 || (-c0) % c1 != 0) return;
        BigInt dn = -c0 / c1;
        if (dn > box[k]) return;
        l(k, k) = dn;
        accept(l, found);
        return;
      }
      const long long lo = (k == 0) ? first : 1;
      const long long hi = (k == 0) ? first : box[k];
      for (long long v = lo; v <= hi; ++v) {
        l(k, k) = v;
        for (std::size_t j = k + 1; j < n; ++j) l(j, j) = 1;
        if (leading(l, k + 1) <= 0) continue;
        bool saturated = true;
        for (std::size_t size = k + 2; size <= n && saturated; ++size)
          if (leading(l, size) <= 0) saturated = false;
        if (saturated) break;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  };

  std::vector<StructureSet> parts(static_cast<std::size_t>(box[0]));
  parallel_for(parts.size(), threads, [&](std::size_t i) { search_from(static_cast<long long>(i) + 1, parts[i]); });
  StructureSet all;
  for (auto &p : parts) all.merge(p);
  return all;
}

/// Boxes large enough to contain every structure of P_n, C_n, K_n.
inline Box certified_box_path(std::size_t n) { return Box(n, static_cast<long long>(n) + 2); }
inline Box certified_box_cycle(std::size_t n) { return Box(n, 3 * static_cast<long long>(n)); }

/// On K_n, d_i + 1 is a unit-fraction denominator, at most s_n - 1 where
/// s_1 = 2, s_{k+1} = s_k (s_k - 1) + 1.
inline Box certified_box_complete(std::size_t n) {
  BigInt s = 2;
  for (std::size_t k = 1; k < n; ++k) s = s * (s - 1) + 1;
  if (s - 1 > BigInt(std::numeric_limits<long long>::max() / 2)) throw DomainError("box bound overflows");
  return Box(n, static_cast<long long>(s - 1));
}

struct BijectionPair {
  ArithStructure path;  // on P_{n+1}
  ArithStructure cycle; // on C_n
};

/// Merges the end vertices of P_{n+1} into w and relabels the resulting cycle
/// so that u_i goes to v_{(i+k-2) mod n + 1}; w lands on v_k. k is 1-based.
inline std::vector<BijectionPair> path_cycle_bijection(std::size_t n, std::size_t k, unsigned threads = 1) {
  if (n < 2) throw DomainError("bijection needs n >= 2");
  if (k < 1 || k > n) throw DomainError("k must lie in 1..n");
  auto p = path_graph(n + 1);
  std::vector<BijectionPair> out;
  for (const auto &s : enumerate_path(n + 1, threads)) {
    auto merged = merge(p, 0, n, s);
    ArithStructure c{Vec(n), Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t target = (i + k - 1) % n;
      c.d[target] = merged.s.d[i];
      c.r[target] = merged.s.r[i];
    }
    out.push_back({s, std::move(c)});
  }
  return out;
}

/// Undirected edges u < v of a simple graph.
inline std::vector<std::pair<std::size_t, std::size_t>> edge_list(const Multidigraph &g) {
  if (!g.symmetric()) throw DomainError("edge list needs an undirected graph");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      if (g.mult(u, v) > 1) throw DomainError("edge list needs a simple graph");
      if (g.mult(u, v) == 1) edges.emplace_back(u, v);
    }
  return edges;
}

/// Replaces edge i of edge_list(g) by a path with counts[i] inner vertices,
/// appended after the original vertices in edge order.
inline Multidigraph subdivide_graph(const Multidigraph &g, const std::vector<std::size_t> &counts) {
  auto edges = edge_list(g);
  if (counts.size() != edges.size()) throw DomainError("need one subdivision count per edge");
  std::size_t total = g.n();
  for (auto c : counts) total += c;
  GraphBuilder b(total);
  std::size_t next = g.n();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::size_t prev = edges[e].first;
    for (std::size_t i = 0; i < counts[e]; ++i, ++next) {
      b.edge(prev, next);
      prev = next;
    }
    b.edge(prev, edges[e].second);
  }
  return b.build();
}

struct SubdivisionCheck {
  BigInt bound;
  std::size_t generated = 0;
  bool holds = false;
};

/// (|A(G)| - 1) prod C_{n_e} + prod C_{n_e + 1}.
inline BigInt subdivision_bound(const BigInt &count_g, const std::vector<std::size_t> &counts) {
  BigInt a = 1, b = 1;
  for (auto c : counts) {
    a *= catalan(static_cast<unsigned>(c));
    b *= catalan(static_cast<unsigned>(c + 1));
  }
  return (count_g - 1) * a + b;
}

/// Structures of s(G) grown by the algorithm from every structure of G, with
/// the inner vertices of each subdivided edge seeded at 0 (and, for r = 1,
/// also at 1 in every combination).
inline StructureSet subdivision_structures(const Multidigraph &g, const std::vector<std::size_t> &counts,
                                           const StructureSet &base, unsigned threads = 1) {
  auto sg = subdivide_graph(g, counts);
  const std::size_t extra = sg.n() - g.n();
  if (extra > 20) throw DomainError("too many subdivision vertices");
  std::vector<const ArithStructure *> items;
  for (const auto &s : base) items.push_back(&s);
  std::vector<StructureSet> parts(items.size());
  parallel_for(items.size(), threads, [&](std::size_t i) {
    const auto &s = *items[i];
    bool ones = std::all_of(s.r.begin(), s.r.end(), [](const BigInt &x) { return x == 1; });
    const std::uint64_t masks = ones ? (std::uint64_t{1} << extra) : 1;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      Vec r0 = s.r;
      for (std::size_t j = 0; j < extra; ++j) r0.push_back((mask >> j & 1u) ? 1 : 0);
      detail::collect_orders(sg, r0, parts[i]);
    }
  });
  StructureSet all;
  for (auto &p : parts) all.merge(p);
  return all;
}

inline SubdivisionCheck subdivision_lower_bound(const Multidigraph &g, const std::vector<std::size_t> &counts,
                                                const StructureSet &base, unsigned threads = 1) {
  SubdivisionCheck out;
  out.bound = subdivision_bound(BigInt(base.size()), counts);
  out.generated = subdivision_structures(g, counts, base, threads).size();
  out.holds = BigInt(out.generated) >= out.bound;
  return out;
}

/// All permutations sigma with m(sigma u, sigma v) = m(u, v); n <= 8.
inline std::vector<std::vector<std::size_t>> automorphisms(const Multidigraph &g) {
  if (g.n() > 8) throw DomainError("automorphism search limited to n <= 8");
  std::vector<std::size_t> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < g.n() && ok; ++u)
      for (std::size_t v = 0; v < g.n() && ok; ++v)
        if (g.mult(p[u], p[v]) != g.mult(u, v)) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline ArithStructure permute(const ArithStructure &s, const std::vector<std::size_t> &p) {
  ArithStructure out{Vec(s.d.size()), Vec(s.r.size())};
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.d[i] = s.d[p[i]];
    out.r[i] = s.r[p[i]];
  }
  return out;
}

/// Structures grouped up to automorphism; each class is sorted and the classes
/// are ordered by their smallest member.
inline std::vector<std::vector<ArithStructure>> group_classes(const Multidigraph &g, const StructureSet &all) {
  auto autos = automorphisms(g);
  std::map<ArithStructure, std::vector<ArithStructure>> by_canon;
  for (const auto &s : all) {
    ArithStructure best = s;
    for (const auto &p : autos) best = std::min(best, permute(s, p));
    by_canon[best].push_back(s);
  }
  std::vector<std::vector<ArithStructure>> out;
  for (auto &[canon, members] : by_canon) out.push_back(std::move(members));
  return out;
}

enum class Family { Path, Cycle, Complete, Star, Other };

inline std::string to_string(Family f) {
  switch (f) {
  case Family::Path: return "path";
  case Family::Cycle: return "cycle";
  case Family::Complete: return "complete";
  case Family::Star: return "star";
  case Family::Other: return "other";
  }
  return "?";
}

/// Family of a connected undirected graph, as labelled (no isomorphism test needed
/// beyond degrees and edge count).
inline Family recognize(const Multidigraph &g) {
  const std::size_t n = g.n();
  if (!g.symmetric() || !is_weakly_connected(g)) return Family::Other;
  if (n == 2 && g.mult(0, 1) == 2) return Family::Cycle;
  std::size_t edges = 0, leaves = 0, hubs = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v)
      if (g.mult(u, v) > 1) return Family::Other;
    auto deg = g.out_degree(u);
    edges += static_cast<std::size_t>(deg);
    if (deg == 1) ++leaves;
    if (static_cast<std::size_t>(deg) + 1 == n) ++hubs;
  }
  edges /= 2;
  if (edges == n * (n - 1) / 2) return Family::Complete;
  bool max2 = true, all2 = true;
  for (std::size_t u = 0; u < n; ++u) {
    max2 = max2 && g.out_degree(u) <= 2;
    all2 = all2 && g.out_degree(u) == 2;
  }
  if (edges + 1 == n && max2) return Family::Path;
  if (edges == n && all2) return Family::Cycle;
  if (edges + 1 == n && hubs == 1 && leaves + 1 == n) return Family::Star;
  return Family::Other;
}

/// |A(S_k)|: ordered d on the leaves with sum 1/d_i a positive integer.
inline BigInt count_star(std::size_t leaves) {
  if (leaves < 1) throw DomainError("star needs at least one leaf");
  BigInt total = 0;
  for (std::size_t t = 1; t <= leaves; ++t)
    for (auto x : unit_fraction_tuples(leaves, Rational(static_cast<long long>(t)))) {
      // distinct orderings of the multiset x
      BigInt ways = 1;
      for (std::size_t i = 1; i <= x.size(); ++i) ways *= i;
      for (std::size_t i = 0; i < x.size();) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i]) ++j;
        for (std::size_t f = 2; f <= j - i; ++f) ways /= f;
        i = j;
      }
      total += ways;
    }
  return total;
}

struct ProbeReport {
  Family family = Family::Other;
  BigInt path_count;     // |A(P_n)|
  BigInt graph_count;    // |A(G)|
  BigInt complete_count; // |A(K_n)|
  bool holds = false;
};

/// Compares |A(G)| with |A(P_n)| and |A(K_n)| for graphs whose count is
/// certified (paths, cycles, complete graphs, stars). Reports, never asserts.
inline ProbeReport conjecture_probe(const Multidigraph &g, unsigned threads = 1) {
  const std::size_t n = g.n();
  if (n > 5) throw DomainError("probe limited to n <= 5");
  ProbeReport rep;
  rep.family = recognize(g);
  switch (rep.family) {
  case Family::Path: rep.graph_count = count_path(static_cast<unsigned>(n)); break;
  case Family::Cycle: rep.graph_count = count_cycle(static_cast<unsigned>(n)); break;
  case Family::Complete: rep.graph_count = n == 1 ? BigInt(0) : BigInt(enumerate_complete(n, 0, threads).size()); break;
  case Family::Star: rep.graph_count = count_star(n - 1); break;
  case Family::Other: throw DomainError("completeness not certifiable for this graph");
  }
  if (n < 2) throw DomainError("probe needs n >= 2");
  rep.path_count = count_path(static_cast<unsigned>(n));
  rep.complete_count = enumerate_complete(n, 0, threads).size();
  rep.holds = rep.path_count <= rep.graph_count && rep.graph_count <= rep.complete_count;
  return rep;
}

} // namespace arithlab
