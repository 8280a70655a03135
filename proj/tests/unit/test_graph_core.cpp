#include "arithlab/graph.hpp"
#include "arithlab/graph_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace arithlab;

TEST(Laplacian, PathP3) {
  IntMatrix expected{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  EXPECT_EQ(laplacian(path_graph(3), make_vec({1, 2, 1})), expected);
}

TEST(Laplacian, CompleteBipartiteK23) {
  // v1 v2 | u1 u2 u3
  GraphBuilder b(5);
  for (std::size_t v : {0, 1})
    for (std::size_t u : {2, 3, 4}) b.edge(v, u);
  IntMatrix expected{{1, 0, -1, -1, -1},
                     {0, 2, -1, -1, -1},
                     {-1, -1, 3, 0, 0},
                     {-1, -1, 0, 4, 0},
                     {-1, -1, 0, 0, 12}};
  EXPECT_EQ(laplacian(b.build(), make_vec({1, 2, 3, 4, 12})), expected);
}

TEST(Laplacian, DoubledEdge) {
  IntMatrix expected{{2, -2}, {-2, 2}};
  EXPECT_EQ(laplacian(cycle_graph(2), make_vec({2, 2})), expected);
}

TEST(Laplacian, LengthMismatchThrows) {
  EXPECT_THROW(laplacian(path_graph(3), make_vec({1, 2})), DomainError);
}

TEST(Laplacian, DegreeVectorKillsOnes) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + trial % 6;
    Matrix<Multiplicity> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) m(i, j) = mult(rng);
    Multidigraph g(m);
    EXPECT_TRUE(is_zero(laplacian(g, degree_vector(g)) * constant_vec(n, 1)));
  }
}

TEST(Connectivity, ReducibleDigraph) {
  Matrix<Multiplicity> m{{0, 0, 1, 0}, {1, 0, 1, 1}, {1, 0, 0, 0}, {1, 1, 1, 0}};
  EXPECT_FALSE(is_strongly_connected(Multidigraph(m)));
}

TEST(Connectivity, SmallCases) {
  EXPECT_TRUE(is_strongly_connected(complete_graph(3)));
  EXPECT_TRUE(is_strongly_connected(Multidigraph::empty(1)));
  EXPECT_FALSE(is_strongly_connected(Multidigraph::empty(2)));
  EXPECT_FALSE(is_strongly_connected(GraphBuilder(2).arc(0, 1).build()));
  EXPECT_TRUE(is_strongly_connected(GraphBuilder(3).arc(0, 1).arc(1, 2).arc(2, 0).build()));
}

TEST(Connectivity, SymmetricMatchesUndirected) {
  std::mt19937 rng(11);
  std::bernoulli_distribution edge(0.3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 7;
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (edge(rng)) b.edge(i, j);
    auto g = b.build();
    EXPECT_EQ(is_strongly_connected(g), is_weakly_connected(g));
  }
}

TEST(Irreducible, Fixtures) {
  EXPECT_FALSE(is_irreducible(IntMatrix{{0, 0, 1, 0}, {1, 0, 1, 1}, {1, 0, 0, 0}, {1, 1, 1, 0}}));
  EXPECT_TRUE(is_irreducible(IntMatrix{{0, 1, 1}, {1, 0, 1}, {0, 1, 0}}));
  EXPECT_TRUE(is_irreducible(IntMatrix{{0}}));
}

TEST(Irreducible, IndependentOfPositiveDiagonal) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> mult(0, 1), dia(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + trial % 5;
    Matrix<Multiplicity> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) m(i, j) = mult(rng);
    Multidigraph g(m);
    Vec d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
      d1[i] = dia(rng);
      d2[i] = dia(rng);
    }
    EXPECT_EQ(is_irreducible(laplacian(g, d1)), is_irreducible(laplacian(g, d2)));
    EXPECT_EQ(is_irreducible(laplacian(g, d1)), is_strongly_connected(g));
  }
}

TEST(GraphIo, ParsesTriangle) {
  EXPECT_EQ(parse_graph("3\n0 1 1\n1 0 1\n1 1 0"), complete_graph(3));
  EXPECT_EQ(parse_graph("2\n0 2\n2 0\n"), cycle_graph(2));
}

TEST(GraphIo, RoundTrip) {
  auto g = parse_graph("\n4\n0 1 0 2\n1 0 1 0\n0 1 0 1\n2 0 1 0\n# labels: a b c d\n");
  EXPECT_EQ(parse_graph(emit_graph(g)), g);
  EXPECT_EQ(emit_graph(parse_graph("  3 \n0  1 1\n1 0 1\n1 1 0\n\n")), "3\n0 1 1\n1 0 1\n1 1 0\n");
  EXPECT_EQ(g.labels().at(3), "d");
}

TEST(GraphIo, RejectsBadInput) {
  EXPECT_THROW(parse_graph("2\n1 1\n1 0"), DomainError);           // loop
  EXPECT_THROW(parse_graph("2\n0 -1\n1 0"), DomainError);          // negative
  EXPECT_THROW(parse_graph("2\n0 1\n1"), DomainError);             // short row
  EXPECT_THROW(parse_graph("2\n0 x\n1 0"), DomainError);           // malformed
  EXPECT_THROW(parse_graph("2\n0 1\n1 0\n# labels: a a"), DomainError);
  EXPECT_THROW(parse_graph("2\n0 1\n1 0\n# labels: a"), DomainError);
  EXPECT_THROW(parse_graph("2\n0 1\n1 0\n0 0"), DomainError);
  EXPECT_THROW(parse_graph(""), DomainError);
  EXPECT_THROW(parse_graph("0\n"), DomainError);
}

TEST(GraphIo, DataFilesLoad) {
  auto g = load_graph(std::string(ARITHLAB_DATA_DIR) + "/k3.graph");
  EXPECT_TRUE(g.symmetric());
  EXPECT_EQ(g.n(), 3u);
  EXPECT_THROW(load_graph(std::string(ARITHLAB_DATA_DIR) + "/missing.graph"), DomainError);
}

TEST(StructureIo, ParseAndFormat) {
  auto s = parse_structure_line("d: 1 2 1 | r: 1 1 1");
  EXPECT_EQ(s.d, make_vec({1, 2, 1}));
  EXPECT_EQ(format_structure(s.d, s.r), "d: 1 2 1 | r: 1 1 1");
  auto all = parse_structure_file("# header\nd: 2 2 | r: 1 1\n\nd: 4 1 | r: 1 2\ntotal: 2\n");
  EXPECT_EQ(all.size(), 2u);
  EXPECT_THROW(parse_structure_line("d: 1 2 | r: 1"), DomainError);
  EXPECT_THROW(parse_structure_line("1 2 1"), DomainError);
}

TEST(Builders, Shapes) {
  EXPECT_EQ(cycle_graph(2).mult(0, 1), 2);
  EXPECT_EQ(star_graph(3).out_degree(0), 3);
  EXPECT_EQ(complete_graph(4).out_degree(2), 3);
  EXPECT_THROW(cycle_graph(1), DomainError);
  EXPECT_THROW(Multidigraph(Matrix<Multiplicity>{{1}}), DomainError);
}
