#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "motifspectra/errors.hpp"
#include "motifspectra/evaluation.hpp"
#include "motifspectra/generators.hpp"
#include "motifspectra/motif.hpp"

using namespace motifspectra;

namespace {

CommunityAssignment random_labels(std::size_t n, int k, std::mt19937_64& rng) {
  std::vector<int> l(n);
  for (auto& x : l) x = int(rng() % std::uint64_t(k));
  return CommunityAssignment(l, k);
}

CommunityAssignment relabel(const CommunityAssignment& c, const std::vector<int>& perm) {
  std::vector<int> l(c.labels().begin(), c.labels().end());
  for (auto& x : l) x = perm[std::size_t(x)];
  return CommunityAssignment(l, c.k());
}

}  // namespace

TEST_CASE("misclustering rate examples") {
  const CommunityAssignment truth({0, 0, 1, 1}, 2);
  CHECK(misclustering_rate(truth, CommunityAssignment({1, 1, 0, 0}, 2)) == 0.0);
  CHECK(misclustering_rate(truth, CommunityAssignment({0, 1, 1, 1}, 2)) == 0.25);
  CHECK(misclustered_count(truth, CommunityAssignment({0, 1, 1, 1}, 2)) == 1);
  CHECK(misclustered_count(truth, truth) == 0);
  CHECK_THROWS_AS(misclustering_rate(truth, CommunityAssignment({0, 1, 1}, 2)), DimensionMismatch);

  std::vector<int> l(34, 0);
  for (int i = 17; i < 34; ++i) l[std::size_t(i)] = 1;
  const CommunityAssignment karate_like(l, 2);
  l[3] = 1;
  CHECK(misclustered_count(karate_like, CommunityAssignment(l, 2)) == 1);

  // Different label counts on the two sides.
  CHECK(misclustering_rate(CommunityAssignment({0, 0, 1, 1, 2, 2}, 3), CommunityAssignment({0, 0, 1, 1, 1, 1}, 2)) ==
        doctest::Approx(2.0 / 6));
}

TEST_CASE("enumeration and matching agree") {
  std::mt19937_64 rng(17);
  for (int r = 0; r < 200; ++r) {
    const int k = 2 + int(rng() % 5);
    const std::size_t n = 10 + rng() % 60;
    const auto t = random_labels(n, k, rng);
    const auto e = random_labels(n, k, rng);
    CHECK(misclustering_rate_enumeration(t, e) == misclustering_rate_matching(t, e));
  }
  const auto t = random_labels(40, 5, rng);
  const auto e = random_labels(40, 5, rng);
  CHECK(misclustering_rate_enumeration(t, e) == misclustering_rate_matching(t, e));
  // Beyond the enumeration range only matching runs.
  const auto t12 = random_labels(200, 12, rng);
  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  CHECK(misclustering_rate(t12, relabel(t12, perm)) == 0.0);
}

TEST_CASE("misclustering rate is invariant under relabeling and bounded") {
  std::mt19937_64 rng(4);
  for (int k = 2; k <= 6; ++k) {
    const auto truth = gen_balanced_assignment(std::size_t(12 * k), std::size_t(k));
    std::vector<int> perm(std::size_t(k), 0);
    std::iota(perm.begin(), perm.end(), 0);
    for (int r = 0; r < 100; ++r) {
      const auto est = random_labels(truth.size(), k, rng);
      const double base = misclustering_rate(truth, est);
      CHECK(base <= 1.0 - 1.0 / k + 1e-12);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(misclustering_rate(truth, relabel(est, perm)) == base);
    }
  }
}

TEST_CASE("assignment solver") {
  const std::vector<std::vector<double>> cost{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  const auto a = solve_assignment(cost);
  double total = 0;
  for (std::size_t i = 0; i < 3; ++i) total += cost[i][std::size_t(a[i])];
  CHECK(total == 5.0);
}

TEST_CASE("spectral norm") {
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(spectral_norm(SymmetricMatrix::from_dense(swap)) == doctest::Approx(1));
  Eigen::MatrixXd d = Eigen::Vector3d(3, -5, 2).asDiagonal();
  CHECK(spectral_norm(SymmetricMatrix::from_dense(d)) == doctest::Approx(5));

  std::mt19937_64 rng(2);
  std::normal_distribution<double> z;
  SymmetricMatrix m(20);
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = i; j < 20; ++j) m.set(i, j, z(rng));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense());
  const double truth = es.eigenvalues().cwiseAbs().maxCoeff();
  CHECK(std::abs(spectral_norm(m) - truth) <= 1e-8 * truth);
  for (double c : {-2.0, 0.5, 7.0}) CHECK(spectral_norm(c * m) == doctest::Approx(std::abs(c) * truth).epsilon(1e-8));
}

TEST_CASE("concentration ratio") {
  SymmetricMatrix a(3);
  a.set(0, 1, 1);
  CHECK(concentration_ratio(a, a, 5.0, Exponent::half) == 0.0);
  Eigen::MatrixXd d = Eigen::Vector2d(2, -1).asDiagonal();
  const auto two = SymmetricMatrix::from_dense(d);
  const SymmetricMatrix zero(2);
  CHECK(concentration_ratio(two, zero, 4.0, Exponent::half) == doctest::Approx(1.0));
  CHECK(concentration_ratio(two, zero, 4.0, Exponent::one) == doctest::Approx(0.5));
  CHECK_THROWS_AS(concentration_ratio(two, zero, 0.0, Exponent::one), InvalidParams);
  CHECK_THROWS_AS(concentration_ratio(two, SymmetricMatrix(3), 1.0, Exponent::one), DimensionMismatch);

  const BlockParams p{200, 2, 10, 4, 3, 1};
  const auto c = gen_balanced_assignment(200, 2);
  const auto g = gen_supsbm(p, c, 1);
  const auto norm = normalizers(200, p.a_e / 200, p.a_t / 200);
  const double r = concentration_ratio(hyperedge_motif_matrix(g), expected_AT2(p, c), norm.delta_t, Exponent::half);
  CHECK(std::isfinite(r));
  CHECK(r > 0);
}

TEST_CASE("normalizers") {
  const auto e = normalizers(3, 1.0, 0.0);
  // n = 3 is the nearest integer above e; delta = max(3, log 3) = 3.
  CHECK(e.delta == doctest::Approx(3.0));

  const double l = std::log(50.0);
  const auto z = normalizers(50, 0, 0);
  CHECK(z.delta == doctest::Approx(l));
  CHECK(z.delta_t == doctest::Approx(l));
  CHECK(z.tau_max == doctest::Approx(l));
  CHECK(z.d_e3 == 0.0);
  CHECK(z.delta_t3 == doctest::Approx(std::pow(l, 4)));
  CHECK(z.delta_t2e == doctest::Approx(std::pow(l, 4)));
  CHECK(z.delta_te2 == doctest::Approx(std::pow(l, 3)));

  // Regression values from an independent script.
  const double n = 1000;
  const auto f = normalizers(1000, std::log(n) / n, std::pow(n, 0.25) / (n * n));
  CHECK(f.delta == doctest::Approx(6.907755278982137).epsilon(1e-12));
  CHECK(f.delta_t == doctest::Approx(6.907755278982137).epsilon(1e-12));
  CHECK(f.tau_max == doctest::Approx(6.907755278982137).epsilon(1e-12));
  CHECK(f.d_e3 == doctest::Approx(329.6179319515431).epsilon(1e-12));
  CHECK(f.delta_t3 == doctest::Approx(2276.920009485447).epsilon(1e-12));
  CHECK(f.delta_t2e == doctest::Approx(2276.920009485447).epsilon(1e-12));
  CHECK(f.delta_te2 == doctest::Approx(329.6179319515431).epsilon(1e-12));

  const auto h = normalizers(100, 0.3, 0.001);
  CHECK(h.delta == doctest::Approx(30.0).epsilon(1e-12));
  CHECK(h.delta_t == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(h.tau_max == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(h.d_e3 == doctest::Approx(2430.0).epsilon(1e-12));
  CHECK(h.delta_t3 == doctest::Approx(449.76197718231066).epsilon(1e-12));
  CHECK(h.delta_t2e == doctest::Approx(449.76197718231066).epsilon(1e-12));
  CHECK(h.delta_te2 == doctest::Approx(97.66457243008689).epsilon(1e-12));
}
