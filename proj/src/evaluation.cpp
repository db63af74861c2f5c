#include "motifspectra/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "motifspectra/errors.hpp"

namespace motifspectra {

namespace {

constexpr int kEnumerationMaxLabels = 8;

// Square confusion matrix: agree[t][e] = #{i : truth_i = t, est_i = e}.
std::vector<std::vector<std::size_t>> confusion(const CommunityAssignment& truth,
                                                const CommunityAssignment& est) {
  if (truth.size() != est.size())
    throw DimensionMismatch("misclustering_rate: truth has " + std::to_string(truth.size()) +
                            " labels, estimate has " + std::to_string(est.size()));
  if (truth.size() == 0) throw InvalidInput("misclustering_rate: empty labeling");
  const auto m = std::size_t(std::max(truth.k(), est.k()));
  std::vector<std::vector<std::size_t>> agree(m, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < truth.size(); ++i) ++agree[std::size_t(truth[i])][std::size_t(est[i])];
  return agree;
}

}  // namespace

double misclustering_rate_enumeration(const CommunityAssignment& truth, const CommunityAssignment& est) {
  const auto agree = confusion(truth, est);
  std::vector<std::size_t> perm(agree.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t matched = 0;
    for (std::size_t e = 0; e < perm.size(); ++e) matched += agree[perm[e]][e];
    best = std::max(best, matched);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return double(truth.size() - best) / double(truth.size());
}

double misclustering_rate_matching(const CommunityAssignment& truth, const CommunityAssignment& est) {
  const auto agree = confusion(truth, est);
  const std::size_t m = agree.size();
  std::vector<std::vector<double>> cost(m, std::vector<double>(m));
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t t = 0; t < m; ++t) cost[e][t] = -double(agree[t][e]);
  const auto assign = solve_assignment(cost);
  std::size_t matched = 0;
  for (std::size_t e = 0; e < m; ++e) matched += agree[std::size_t(assign[e])][e];
  return double(truth.size() - matched) / double(truth.size());
}

double misclustering_rate(const CommunityAssignment& truth, const CommunityAssignment& est) {
  if (std::max(truth.k(), est.k()) <= kEnumerationMaxLabels)
    return misclustering_rate_enumeration(truth, est);
  return misclustering_rate_matching(truth, est);
}

std::size_t misclustered_count(const CommunityAssignment& truth, const CommunityAssignment& est) {
  return std::size_t(std::llround(misclustering_rate(truth, est) * double(truth.size())));
}

// Shortest augmenting path with row/column potentials, O(m^3).
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t m = cost.size();
  for (const auto& row : cost)
    if (row.size() != m) throw DimensionMismatch("solve_assignment: cost matrix must be square");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  for (std::size_t row = 1; row <= m; ++row) {
    owner[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[col0] = 1;
      const std::size_t r0 = owner[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= m; ++c) {
        if (used[c]) continue;
        const double cur = cost[r0 - 1][c - 1] - u[r0] - v[c];
        if (cur < minv[c]) {
          minv[c] = cur;
          way[c] = col0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      for (std::size_t c = 0; c <= m; ++c) {
        if (used[c]) {
          u[owner[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (owner[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      owner[col0] = owner[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<int> assignment(m, -1);
  for (std::size_t c = 1; c <= m; ++c) assignment[owner[c] - 1] = int(c - 1);
  return assignment;
}

double spectral_norm(const SymmetricMatrix& m, double tol) {
  if (!(tol > 0.0)) throw InvalidParams("spectral_norm: tol must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.dense(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw SolverFailure("spectral_norm: eigenvalue iteration did not converge",
                        std::numeric_limits<double>::infinity());
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double concentration_ratio(const SymmetricMatrix& a, const SymmetricMatrix& ea, double normalizer,
                           Exponent exponent) {
  if (!(normalizer > 0.0)) throw InvalidParams("concentration_ratio: normalizer must be positive");
  const double scale = exponent == Exponent::half ? std::sqrt(normalizer) : normalizer;
  return spectral_norm(a - ea) / scale;
}

ConcentrationNormalizer normalizers(std::size_t n, double pe, double pt) {
  if (!(pe >= 0.0 && pe <= 1.0 && pt >= 0.0 && pt <= 1.0))
    throw InvalidParams("normalizers: probabilities must lie in [0,1]");
  const double dn = double(n);
  const double l = std::log(dn);
  ConcentrationNormalizer c;
  c.delta = std::max(dn * pe, l);
  c.delta_t = std::max(dn * dn * pt, l);
  c.tau_max = std::max(dn * pe * pe, l);
  c.d_e3 = std::max(std::pow(dn, 3) * std::pow(pe, 5), dn * pe * l * l);
  c.delta_t3 = std::max(std::pow(dn, 5) * std::pow(pt, 3), std::pow(l, 4));
  c.delta_t2e = std::max(std::pow(dn, 4) * pt * pt * pe, std::pow(l, 4));
  c.delta_te2 = std::max(std::pow(dn, 3) * pt * pe * pe, std::pow(l, 3));
  return c;
}

}  // namespace motifspectra
