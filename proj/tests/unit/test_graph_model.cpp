#include "doctest.h"

#include "motifspectra/errors.hpp"
#include "motifspectra/generators.hpp"
#include "motifspectra/graph_model.hpp"

using namespace motifspectra;

TEST_CASE("symmetric matrix keeps both halves equal") {
  SymmetricMatrix m(3);
  CHECK(m.dense().isZero());
  m.set(0, 2, 1.5);
  m.add(2, 0, 0.5);
  CHECK(m(0, 2) == 2.0);
  CHECK(m(2, 0) == 2.0);
  m.set(1, 1, 4.0);
  CHECK(m(1, 1) == 4.0);

  SymmetricMatrix twice = m + m;
  CHECK(twice(0, 2) == 4.0);
  CHECK((twice - m) == m);
  CHECK((0.5 * twice) == m);
}

TEST_CASE("symmetric matrix rejects bad input") {
  CHECK_THROWS_AS(SymmetricMatrix(0), InvalidParams);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(SymmetricMatrix::from_dense(asym), InvalidInput);
  CHECK_THROWS_AS(SymmetricMatrix::from_dense(Eigen::MatrixXd(2, 3)), InvalidInput);
  CHECK_THROWS_AS(SymmetricMatrix::from_dense(Eigen::MatrixXd(0, 0)), InvalidInput);
  SymmetricMatrix a(2), b(3);
  CHECK_THROWS_AS(a += b, DimensionMismatch);
}

TEST_CASE("community assignment") {
  CommunityAssignment c({0, 1, 1, 2, 0, 2}, 3);
  CHECK(c.size() == 6);
  CHECK(c.k() == 3);
  CHECK(c.community_sizes() == std::vector<std::size_t>{2, 2, 2});
  CHECK(c.balanced());
  CHECK(c.members()[1] == std::vector<Vertex>{1, 2});
  CHECK_FALSE(CommunityAssignment({0, 0, 1}, 2).balanced());
  CHECK_THROWS_AS(CommunityAssignment({0, 2}, 2), InvalidInput);
  CHECK_THROWS_AS(CommunityAssignment({0, -1}, 2), InvalidInput);
  CHECK_THROWS_AS(CommunityAssignment({0}, 0), InvalidParams);
}

TEST_CASE("block params validation") {
  BlockParams p{6, 2, 3, 1, 3, 1};
  CHECK_NOTHROW(p.validate());
  CHECK(p.p_edge_within() == doctest::Approx(0.5));
  CHECK(p.p_triangle_across() == doctest::Approx(1.0 / 6));
  CHECK(p.block_size() == 3);
  CHECK_THROWS_AS((BlockParams{5, 2, 1, 1, 1, 1}.validate()), InvalidParams);
  CHECK_THROWS_AS((BlockParams{6, 2, 1, 2, 1, 1}.validate()), InvalidParams);
  CHECK_THROWS_AS((BlockParams{6, 2, 7, 1, 1, 1}.validate()), InvalidParams);
  CHECK_THROWS_AS((BlockParams{6, 2, 1, 1, 1, -1}.validate()), InvalidParams);
  CHECK_THROWS_AS((BlockParams{6, 0, 1, 1, 1, 1}.validate()), InvalidParams);
}

TEST_CASE("superimposed graph canonical storage") {
  SuperimposedGraph a(4, {{1, 0}, {0, 1}, {2, 3}}, {{2, 1, 0}, {0, 1, 2}});
  SuperimposedGraph b(4, {{3, 2}, {0, 1}}, {{1, 2, 0}});
  CHECK(a == b);
  CHECK(a.dyadic_edges().size() == 2);
  CHECK(a.hyperedges().size() == 1);
  CHECK(a.has_hyperedge(2, 0, 1));
  CHECK_FALSE(a.has_hyperedge(0, 1, 3));
  CHECK(a.has_dyadic_edge(1, 0));

  CHECK_THROWS_AS(SuperimposedGraph(3, {{1, 1}}, {}), InvalidInput);
  CHECK_THROWS_AS(SuperimposedGraph(3, {{0, 3}}, {}), InvalidInput);
  CHECK_THROWS_AS(SuperimposedGraph(3, {}, {{0, 1, 1}}), InvalidInput);
  CHECK_THROWS_AS(SuperimposedGraph(3, {}, {{0, 1, 5}}), InvalidInput);
}

TEST_CASE("simple projection") {
  CHECK(simple_projection(SuperimposedGraph(3, {}, {})).dense().isZero());

  const auto tri = simple_projection(SuperimposedGraph(3, {}, {{0, 1, 2}}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(tri(i, j) == (i == j ? 0.0 : 1.0));

  const auto both = simple_projection(SuperimposedGraph(3, {{0, 1}}, {{0, 1, 2}}));
  CHECK(both(0, 1) == 1.0);
}

TEST_CASE("multiplicity matrix") {
  const SuperimposedGraph g(3, {{0, 1}}, {{0, 1, 2}});
  const auto m = multiplicity_matrix(g);
  CHECK(m(0, 1) == 2.0);
  CHECK(m(0, 2) == 1.0);
  CHECK(m(1, 2) == 1.0);
  CHECK(g.multiplicity(0, 1) == 2);

  const SuperimposedGraph h(4, {}, {{0, 1, 2}, {0, 1, 3}});
  CHECK(multiplicity_matrix(h)(0, 1) == 1.0);
  CHECK(h.triangle_cover_count(0, 1) == 2);

  CHECK(multiplicity_matrix(SuperimposedGraph(3, {}, {})).dense().isZero());
}

TEST_CASE("degree vector") {
  SymmetricMatrix two(2);
  two.set(0, 1, 1.0);
  CHECK(degree_vector(two) == Eigen::Vector2d(1, 1));
  CHECK(degree_vector(SymmetricMatrix(3)).isZero());
  SymmetricMatrix k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.set(i, j, 1.0);
  CHECK(degree_vector(k4) == Eigen::Vector4d(3, 3, 3, 3));
}

TEST_CASE("generated graphs: cover counts and multiplicity invariants") {
  const BlockParams p{30, 3, 6, 2, 3, 1};
  const auto c = gen_balanced_assignment(30, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_supsbm(p, c, seed);
    const auto proj = simple_projection(g);
    const auto mult = multiplicity_matrix(g);
    for (Vertex i = 0; i < 30; ++i) {
      for (Vertex j = 0; j < 30; ++j) {
        if (i == j) continue;
        std::uint32_t brute = 0;
        for (const auto& t : g.hyperedges())
          brute += (t[0] == i || t[1] == i || t[2] == i) && (t[0] == j || t[1] == j || t[2] == j);
        CHECK(g.triangle_cover_count(i, j) == brute);
        const double d = mult(i, j) - proj(i, j);
        CHECK((d == 0.0 || d == 1.0));
        CHECK((d == 1.0) == (g.has_dyadic_edge(i, j) && brute > 0));
      }
    }
  }
}
