#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "motifspectra/errors.hpp"
#include "motifspectra/generators.hpp"
#include "motifspectra/motif.hpp"

using namespace motifspectra;

namespace {

SymmetricMatrix random_adjacency(std::size_t n, double p, std::uint64_t seed) {
  return simple_projection(gen_inhomogeneous(n, constant_provider(p, 0.0), seed));
}

SymmetricMatrix brute_triangles(const SymmetricMatrix& a) {
  const auto n = a.size();
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      double c = 0;
      for (std::size_t k = 0; k < n; ++k) c += (k != i && k != j && a(i, k) == 1 && a(j, k) == 1);
      out.set(i, j, c);
    }
  return out;
}

// Indicator definitions evaluated directly on one triple, independent of the
// library's classify_triple.
TripleIndicators oracle_indicators(const SuperimposedGraph& g, Vertex i, Vertex j, Vertex k) {
  const std::array<VertexPair, 3> sides{{{i, j}, {j, k}, {i, k}}};
  std::array<bool, 3> e{}, cov{};
  for (int s = 0; s < 3; ++s) {
    e[s] = g.has_dyadic_edge(sides[s][0], sides[s][1]);
    cov[s] = g.triangle_cover_count(sides[s][0], sides[s][1]) > 0;
  }
  TripleIndicators t;
  t.hyperedge = g.has_hyperedge(i, j, k);
  t.edges3 = e[0] && e[1] && e[2];
  if (t.hyperedge) return t;
  t.triangles3 = cov[0] && cov[1] && cov[2] && !t.edges3;
  for (int s = 0; s < 3; ++s) {
    const int a = (s + 1) % 3, b = (s + 2) % 3;
    // side s dyadic only, the other two hyperedge-covered only
    if (e[s] && !cov[s] && cov[a] && !e[a] && cov[b] && !e[b]) t.triangles2edge = true;
    // side s hyperedge-covered only, the other two dyadic only
    if (cov[s] && !e[s] && e[a] && !cov[a] && e[b] && !cov[b]) t.triangle_edges2 = true;
  }
  return t;
}

TriangleDecomposition oracle_decomposition(const SuperimposedGraph& g) {
  const auto n = g.num_vertices();
  TriangleDecomposition d{SymmetricMatrix(n), SymmetricMatrix(n), SymmetricMatrix(n), SymmetricMatrix(n),
                          SymmetricMatrix(n)};
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      for (Vertex k = j + 1; k < n; ++k) {
        const auto t = oracle_indicators(g, i, j, k);
        auto bump = [&](SymmetricMatrix& m, bool on) {
          if (!on) return;
          m.add(i, j, 1);
          m.add(j, k, 1);
          m.add(i, k, 1);
        };
        bump(d.a_t2, t.hyperedge);
        bump(d.a_e3, t.edges3);
        bump(d.a_t3, t.triangles3);
        bump(d.a_t2e, t.triangles2edge);
        bump(d.a_te2, t.triangle_edges2);
      }
  return d;
}

void check_on_triple(const SymmetricMatrix& m, Vertex a, Vertex b, Vertex c) {
  for (Vertex i = 0; i < m.size(); ++i)
    for (Vertex j = 0; j < m.size(); ++j) {
      const bool on = i != j && (i == a || i == b || i == c) && (j == a || j == b || j == c);
      CHECK(m(i, j) == (on ? 1.0 : 0.0));
    }
}

double smallest_nonzero_abs_eigenvalue(const SymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense(), Eigen::EigenvaluesOnly);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  double best = INFINITY;
  for (double v : es.eigenvalues())
    if (std::abs(v) > 1e-9 * scale) best = std::min(best, std::abs(v));
  return best;
}

}  // namespace

TEST_CASE("observed triangle counts: small cases") {
  SymmetricMatrix k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.set(i, j, 1);
  const auto t = triangle_motif_observed(k4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(t(i, j) == (i == j ? 0.0 : 2.0));

  SymmetricMatrix path(3);
  path.set(0, 1, 1);
  path.set(1, 2, 1);
  CHECK(triangle_motif_observed(path).dense().isZero());

  SymmetricMatrix bad(3);
  bad.set(0, 1, 2);
  CHECK_THROWS_AS(triangle_motif_observed(bad), InvalidInput);
  SymmetricMatrix diag(3);
  diag.set(1, 1, 1);
  CHECK_THROWS_AS(triangle_motif_observed(diag), InvalidInput);
}

TEST_CASE("observed triangle counts match a brute-force scan") {
  CHECK(triangle_motif_observed(random_adjacency(20, 0.5, 1)) == brute_triangles(random_adjacency(20, 0.5, 1)));
  std::mt19937_64 rng(5);
  for (int r = 0; r < 50; ++r) {
    const std::size_t n = 3 + rng() % 38;
    const double p = 0.05 + 0.9 * double(rng() % 1000) / 1000.0;
    const auto a = random_adjacency(n, p, rng());
    CHECK(triangle_motif_observed(a) == brute_triangles(a));
  }
}

TEST_CASE("decomposition hand examples") {
  const SuperimposedGraph one(5, {}, {{0, 1, 2}});
  const auto d1 = decompose_triangles(one);
  check_on_triple(d1.a_t2, 0, 1, 2);
  CHECK(d1.a_e3.dense().isZero());
  CHECK(d1.a_t3.dense().isZero());
  CHECK(d1.a_t2e.dense().isZero());
  CHECK(d1.a_te2.dense().isZero());
  CHECK(triangle_motif_generative(d1) == d1.a_t2);

  const SuperimposedGraph t3(7, {}, {{0, 1, 4}, {1, 2, 5}, {0, 2, 6}});
  const auto d2 = decompose_triangles(t3);
  CHECK(d2.a_t3(0, 1) == 1);
  CHECK(d2.a_t3(1, 2) == 1);
  CHECK(d2.a_t3(0, 2) == 1);
  CHECK(d2.a_t3.dense().sum() == 6);

  const SuperimposedGraph t2e(6, {{0, 2}}, {{0, 1, 4}, {1, 2, 5}});
  check_on_triple(decompose_triangles(t2e).a_t2e, 0, 1, 2);

  const SuperimposedGraph te2(5, {{1, 2}, {0, 2}}, {{0, 1, 4}});
  check_on_triple(decompose_triangles(te2).a_te2, 0, 1, 2);

  const SuperimposedGraph both(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1, 2}});
  const auto ind = classify_triple(both, 0, 1, 2);
  CHECK(ind.hyperedge);
  CHECK(ind.edges3);
  CHECK(ind.sum() == 2);
  CHECK(triangle_motif_generative(decompose_triangles(both))(0, 1) == 2);

  CHECK(triangle_motif_generative(decompose_triangles(SuperimposedGraph(4, {}, {}))).dense().isZero());
}

TEST_CASE("decomposition agrees with the triple-by-triple definitions on random draws") {
  std::mt19937_64 rng(11);
  for (int r = 0; r < 100; ++r) {
    const std::size_t k = 1 + rng() % 3;
    const std::size_t n = k * (4 + rng() % (40 / k - 3));
    const double scale = double(n);
    // Dense enough that every indicator fires somewhere across the runs.
    const double a_e = scale * (0.1 + 0.3 * double(rng() % 100) / 100);
    const double a_t = scale * (0.01 + 0.05 * double(rng() % 100) / 100);
    const BlockParams p{n, k, a_e, a_e / 2, a_t, a_t / 3};
    const auto g = gen_supsbm(p, gen_balanced_assignment(n, k), rng());
    const auto d = decompose_triangles(g);
    const auto o = oracle_decomposition(g);
    CHECK(d.a_t2 == o.a_t2);
    CHECK(d.a_e3 == o.a_e3);
    CHECK(d.a_t3 == o.a_t3);
    CHECK(d.a_t2e == o.a_t2e);
    CHECK(d.a_te2 == o.a_te2);
    CHECK(hyperedge_motif_matrix(g) == d.a_t2);

    const auto proj = simple_projection(g);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        for (Vertex l = j + 1; l < n; ++l) {
          const auto t = classify_triple(g, i, j, l);
          const int s = t.sum();
          CHECK(s <= 2);
          if (s == 2) CHECK((t.hyperedge && t.edges3));
          if (s >= 1) CHECK((proj(i, j) == 1 && proj(j, l) == 1 && proj(i, l) == 1));
        }
    // Each generative triple is an observed triangle counted at most twice.
    const auto obs = triangle_motif_observed(proj);
    CHECK((triangle_motif_generative(d).dense().array() <= 2.0 * obs.dense().array()).all());
  }
}

TEST_CASE("dyadic adjacency") {
  const SuperimposedGraph g(4, {{0, 1}, {2, 3}}, {{0, 1, 2}});
  const auto a = dyadic_adjacency(g);
  CHECK(a(0, 1) == 1);
  CHECK(a(2, 3) == 1);
  CHECK(a(0, 2) == 0);
  CHECK(a.dense().sum() == 4);
}

TEST_CASE("expected matrices: closed-form values") {
  const BlockParams p{6, 2, 3, 1, 3, 1};
  const auto c = gen_balanced_assignment(6, 2);
  const auto ae2 = expected_AE2(p, c);
  CHECK(ae2(0, 1) == doctest::Approx(0.5));
  CHECK(ae2(0, 3) == doctest::Approx(1.0 / 6));
  CHECK(ae2(0, 0) == 0.0);
  const auto at2 = expected_AT2(p, c);
  CHECK(at2(0, 1) == doctest::Approx(1.0));
  CHECK(at2(0, 4) == doctest::Approx(2.0 / 3));
  CHECK(expected_AE2(p, c, Diagonal::block_form)(2, 2) == doctest::Approx(0.5));

  const auto flat = expected_AE2(BlockParams{6, 2, 2, 2, 0, 0}, c);
  CHECK(flat(0, 5) == doctest::Approx(1.0 / 3));
  CHECK(flat(0, 1) == doctest::Approx(1.0 / 3));
  const auto flat_t = expected_AT2(BlockParams{6, 2, 0, 0, 2, 2}, c);
  CHECK(flat_t(1, 2) == doctest::Approx(4 * 2.0 / 6));
  CHECK(flat_t(1, 5) == doctest::Approx(4 * 2.0 / 6));

  const BlockParams q{8, 2, 4, 2, 0, 0};
  const auto c8 = gen_balanced_assignment(8, 2);
  const auto ae3 = expected_AE3(q, c8);
  CHECK(ae3(0, 1) == doctest::Approx(0.375));
  CHECK(ae3(0, 7) == doctest::Approx(0.1875));
  const double pp = 0.3;
  CHECK(expected_AE3(BlockParams{8, 2, pp * 8, pp * 8, 0, 0}, c8)(2, 6) == doctest::Approx(pp * pp * pp * 6));

  CHECK_THROWS_AS(expected_AE2(p, gen_balanced_assignment(6, 3)), InvalidParams);
  CHECK_THROWS_AS(expected_AT2(p, CommunityAssignment({0, 0, 0, 0, 1, 1}, 2)), InvalidParams);
}

TEST_CASE("expected matrices equal direct sums over the third vertex") {
  const BlockParams p{12, 3, 5, 2, 4, 1};
  const auto c = gen_balanced_assignment(12, 3);
  auto pe = [&](Vertex i, Vertex j) { return (c[i] == c[j] ? p.a_e : p.b_e) / 12.0; };
  auto pt = [&](Vertex i, Vertex j, Vertex k) {
    return (c[i] == c[j] && c[j] == c[k] ? p.a_t : p.b_t) / 12.0;
  };
  const auto at2 = expected_AT2(p, c);
  const auto ae3 = expected_AE3(p, c);
  for (Vertex i = 0; i < 12; ++i)
    for (Vertex j = 0; j < 12; ++j) {
      if (i == j) continue;
      double t = 0, e = 0;
      for (Vertex k = 0; k < 12; ++k) {
        if (k == i || k == j) continue;
        t += pt(i, j, k);
        e += pe(i, j) * pe(j, k) * pe(i, k);
      }
      CHECK(at2(i, j) == doctest::Approx(t).epsilon(1e-12));
      CHECK(ae3(i, j) == doctest::Approx(e).epsilon(1e-12));
    }
}

TEST_CASE("lambda_min closed forms") {
  const auto l = lambda_min_AT2(BlockParams{6, 2, 3, 1, 3, 1});
  CHECK(l.value == doctest::Approx(1.0));
  CHECK_FALSE(l.degenerate);
  const auto c6 = gen_balanced_assignment(6, 2);
  CHECK(smallest_nonzero_abs_eigenvalue(expected_AT2({6, 2, 3, 1, 3, 1}, c6, Diagonal::block_form)) ==
        doctest::Approx(1.0));
  CHECK(lambda_min_AT2(BlockParams{6, 2, 3, 1, 2, 2}).degenerate);
  CHECK(lambda_min_AT2(BlockParams{6, 2, 3, 1, 2, 2}).value == 0.0);
  CHECK(lambda_min_AT2(BlockParams{50 * 2, 2, 0, 0, 6, 2}).value == doctest::Approx(48 * 2.0));

  CHECK(lambda_min_AE3(BlockParams{8, 2, 3, 3, 0, 0}).degenerate);
  const BlockParams q{8, 2, 4, 2, 0, 0};
  CHECK(lambda_min_AE3(q).value ==
        doctest::Approx(smallest_nonzero_abs_eigenvalue(
                            expected_AE3(q, gen_balanced_assignment(8, 2), Diagonal::block_form)))
            .epsilon(1e-10));
  // 2n vertices in two blocks with doubled rates.
  const double a = 7, b = 3, n = 100;
  const double simplified = a * (a + b) * (a - b) / n - 2 * a * (a + b) * (a - b) / (n * n);
  CHECK(lambda_min_AE3(BlockParams{200, 2, 2 * a, 2 * b, 0, 0}).value == doctest::Approx(simplified).epsilon(1e-12));
}

TEST_CASE("lambda_min matches the block-form spectrum for random parameters") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int r = 0; r < 20; ++r) {
    const std::size_t k = 2 + rng() % 4;
    const std::size_t n = k * (3 + rng() % 20);
    const double a_e = double(n) * (0.2 + 0.8 * u(rng)), b_e = a_e * u(rng) * 0.9;
    const double a_t = double(n) * (0.2 + 0.8 * u(rng)), b_t = a_t * u(rng) * 0.9;
    const BlockParams p{n, k, a_e, b_e, a_t, b_t};
    const auto c = gen_balanced_assignment(n, k);
    const double t = smallest_nonzero_abs_eigenvalue(expected_AT2(p, c, Diagonal::block_form));
    const double e = smallest_nonzero_abs_eigenvalue(expected_AE3(p, c, Diagonal::block_form));
    CHECK(std::abs(lambda_min_AT2(p).value - t) <= 1e-8 * t);
    CHECK(std::abs(lambda_min_AE3(p).value - e) <= 1e-8 * e);
  }
}

TEST_CASE("Monte Carlo means of A_T2 and A_E3 match the expected matrices") {
  // Block-averaged entries per draw, so one mean and one standard error per
  // block type.
  auto check_blocks = [](const BlockParams& p, int draws, bool triangles) {
    const auto c = gen_balanced_assignment(p.n, p.k);
    const auto expect = triangles ? expected_AT2(p, c) : expected_AE3(p, c);
    std::vector<double> within, across;
    for (int s = 0; s < draws; ++s) {
      const auto g = triangles ? gen_hypergraph_3uniform(p, c, std::uint64_t(s)) : gen_sbm(p, c, std::uint64_t(s));
      const auto m = triangles ? hyperedge_motif_matrix(g) : decompose_triangles(g).a_e3;
      double w = 0, a = 0;
      std::size_t nw = 0, na = 0;
      for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = i + 1; j < p.n; ++j) {
          if (c[i] == c[j]) {
            w += m(i, j);
            ++nw;
          } else {
            a += m(i, j);
            ++na;
          }
        }
      within.push_back(w / double(nw));
      across.push_back(a / double(na));
    }
    auto band = [&](const std::vector<double>& xs, double target) {
      double mean = 0, var = 0;
      for (double x : xs) mean += x;
      mean /= double(xs.size());
      for (double x : xs) var += (x - mean) * (x - mean);
      var /= double(xs.size() - 1);
      CHECK(std::abs(mean - target) < 3 * std::sqrt(var / double(xs.size())));
    };
    band(within, expect(0, 1));
    band(across, expect(0, p.n - 1));
  };
  check_blocks(BlockParams{60, 2, 0, 0, 3, 1}, 2000, true);
  check_blocks(BlockParams{16, 2, 8, 3, 0, 0}, 2000, false);
}
