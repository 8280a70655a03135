#include "arithlab/enumerate.hpp"
#include "arithlab/structure.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace arithlab;

namespace {

/// K_4 with the edge v3 v4 replaced by v3 - s - v4, s last.
Multidigraph subdivided_k4() {
  return GraphBuilder(5).edge(0, 1).edge(0, 2).edge(0, 3).edge(1, 2).edge(1, 3).edge(2, 4).edge(3, 4).build();
}

} // namespace

TEST(Verify, Fixtures) {
  EXPECT_TRUE(verify(path_graph(3), make_vec({1, 2, 1}), make_vec({1, 1, 1})));
  EXPECT_TRUE(verify(subdivided_k4(), make_vec({4, 4, 2, 2, 3}), make_vec({2, 2, 3, 3, 2})));
  auto bad = verify(path_graph(2), make_vec({2, 2}), make_vec({1, 2}));
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.diagnostic, "(L r)_2 = 3");
}

TEST(Verify, DiagnosticsNameFirstViolation) {
  auto p3 = path_graph(3);
  EXPECT_NE(verify(p3, make_vec({0, 2, 1}), make_vec({1, 1, 1})).diagnostic.find("d_1"), std::string::npos);
  EXPECT_NE(verify(p3, make_vec({1, 2, 1}), make_vec({1, -1, 1})).diagnostic.find("r_2"), std::string::npos);
  EXPECT_NE(verify(p3, make_vec({1, 2, 1}), make_vec({2, 2, 2})).diagnostic.find("gcd"), std::string::npos);
  EXPECT_THROW(verify(p3, make_vec({1, 2}), make_vec({1, 1})), DomainError);
}

TEST(RecoverD, Fixtures) {
  EXPECT_EQ(recover_d(path_graph(5), make_vec({1, 4, 3, 2, 1})), make_vec({4, 1, 2, 2, 2}));
  EXPECT_TRUE(verify(path_graph(5), make_vec({4, 1, 2, 2, 2}), make_vec({1, 4, 3, 2, 1})));
  EXPECT_EQ(recover_d(cycle_graph(3), make_vec({1, 2, 3})), make_vec({5, 2, 1}));
  EXPECT_FALSE(recover_d(path_graph(3), make_vec({1, 1, 2})).has_value());
}

TEST(RecoverD, RoundTripOnEnumerated) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto &s : enumerate_path(n)) EXPECT_EQ(recover_d(path_graph(n), s.r), s.d);
    for (const auto &s : enumerate_cycle(n)) EXPECT_EQ(recover_d(cycle_graph(n), s.r), s.d);
  }
}

TEST(Structures, LaplacianInvariants) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto g = cycle_graph(n);
    for (const auto &s : enumerate_cycle(n)) {
      auto l = laplacian(g, s.d);
      EXPECT_EQ(classify(l), MatrixClass::AlmostNonsingularM);
      EXPECT_EQ(determinant(l), 0);
      EXPECT_EQ(primitive_kernel(l), s.r);
    }
  }
}

TEST(CriticalGroup, Fixtures) {
  auto k3 = critical_group(complete_graph(3), make_vec({2, 2, 2}), make_vec({1, 1, 1}));
  EXPECT_EQ(k3.torsion_string(), "Z_3");
  // m = det of L with row and column 1 deleted, divided by r_1^2
  auto l = laplacian(complete_graph(3), make_vec({1, 2, 5}));
  BigInt minor = oracle::minor_cofactor(l, 0b110);
  auto grp = critical_group(complete_graph(3), make_vec({1, 2, 5}), make_vec({3, 2, 1}));
  EXPECT_EQ(minor % 9, 0);
  EXPECT_EQ(grp.torsion_order(), minor / 9);
}

TEST(CriticalGroup, PathsHaveTrivialTorsion) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto &s : enumerate_path(n)) EXPECT_TRUE(critical_group(path_graph(n), s).torsion_trivial());
}

TEST(CriticalGroup, OrderFromMinors) {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto g = cycle_graph(n);
    for (const auto &s : enumerate_cycle(n)) {
      auto l = laplacian(g, s.d);
      auto order = critical_group(g, s).torsion_order();
      for (std::size_t u = 0; u < n; ++u) {
        std::uint32_t mask = ((1u << n) - 1) & ~(1u << u);
        EXPECT_EQ(oracle::minor_cofactor(l, mask), order * s.r[u] * s.r[u]);
      }
    }
  }
}

TEST(CriticalGroup, Rejections) {
  EXPECT_THROW(critical_group(path_graph(3), make_vec({1, 1, 1}), make_vec({1, 1, 1})), DomainError);
  Multidigraph not_strong(Matrix<Multiplicity>{{0, 1}, {0, 0}});
  EXPECT_THROW(critical_group(not_strong, make_vec({1, 1}), make_vec({0, 1})), DomainError);
}

TEST(CriticalGroup, NonSymmetric) {
  Multidigraph g(Matrix<Multiplicity>{{0, 2, 0}, {0, 0, 1}, {1, 1, 0}});
  auto d = degree_vector(g);
  auto grp = critical_group(g, d, constant_vec(3, 1));
  EXPECT_EQ(grp.torsion_order(), smith_normal_form(laplacian(g, d)).cokernel.torsion_order());
}

TEST(Cone, RegularFixtures) {
  auto c4 = cone_regular(cycle_graph(4), 2);
  EXPECT_EQ(c4.s.d, make_vec({2, 4, 4, 4, 4}));
  EXPECT_EQ(c4.s.r, make_vec({2, 1, 1, 1, 1}));
  EXPECT_TRUE(verify(c4.graph, c4.s));

  auto k1 = cone_regular(Multidigraph::empty(1), 1);
  EXPECT_EQ(k1.graph, path_graph(2));
  EXPECT_EQ(k1.s.d, make_vec({1, 1}));
  EXPECT_EQ(k1.s.r, make_vec({1, 1}));

  auto f4 = cone_regular(cycle_graph(4), 4);
  EXPECT_EQ(f4.s.d, make_vec({1, 6, 6, 6, 6}));
  EXPECT_EQ(f4.s.r, make_vec({4, 1, 1, 1, 1}));
  EXPECT_TRUE(verify(f4.graph, f4.s));

  EXPECT_THROW(cone_regular(cycle_graph(4), 3), DomainError);
  EXPECT_THROW(cone_regular(path_graph(3), 1), DomainError);
}

TEST(Cone, GeneralFixtures) {
  auto k3 = cone_general(path_graph(2), make_vec({2, 2}), make_vec({1, 1}), 1);
  EXPECT_EQ(k3.graph, complete_graph(3));
  EXPECT_EQ(k3.s.d, make_vec({2, 2, 2}));
  EXPECT_EQ(k3.s.r, make_vec({1, 1, 1}));

  auto k4 = cone_general(complete_graph(3), make_vec({3, 3, 3}), make_vec({1, 1, 1}), 1);
  EXPECT_EQ(k4.graph, complete_graph(4));
  EXPECT_EQ(k4.s.d, make_vec({3, 3, 3, 3}));
  EXPECT_TRUE(verify(k4.graph, k4.s));

  EXPECT_THROW(cone_general(path_graph(2), make_vec({2, 2}), make_vec({1, 1}), 2), DomainError);
  EXPECT_THROW(cone_general(path_graph(2), make_vec({4, 4}), make_vec({1, 1}), 3), DomainError);
  auto apex_one = cone_general(path_graph(2), make_vec({3, 3}), make_vec({1, 1}), 2);
  EXPECT_EQ(apex_one.s.d, make_vec({1, 3, 3}));
  EXPECT_EQ(apex_one.s.r, make_vec({2, 1, 1}));
  EXPECT_TRUE(verify(apex_one.graph, apex_one.s));
}

TEST(Cone, RegularIsSpecialCaseOfGeneral) {
  for (std::size_t n : {3, 4, 6}) {
    auto g = cycle_graph(n);
    for (long long f = 1; f <= static_cast<long long>(n); ++f) {
      if (n % f) continue;
      auto a = cone_regular(g, f);
      auto b = cone_general(g, constant_vec(n, 2 + f), constant_vec(n, 1), f);
      EXPECT_EQ(a.graph, b.graph);
      EXPECT_EQ(a.s, b.s);
      EXPECT_TRUE(verify(a.graph, a.s));
    }
  }
}
