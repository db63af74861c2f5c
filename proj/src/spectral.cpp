#include "motifspectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <lapacke.h>

#include "motifspectra/errors.hpp"
#include "motifspectra/motif.hpp"
#include "motifspectra/rng.hpp"

namespace motifspectra {

namespace {

struct Pair {
  double value;
  Eigen::VectorXd vector;
};

// Eigenpairs with 1-based indices [lo, hi] in ascending order (dsyevr, MRRR).
std::vector<Pair> eigen_range(const SymmetricMatrix& m, lapack_int lo, lapack_int hi) {
  const auto n = lapack_int(m.size());
  Eigen::MatrixXd work = m.dense();
  const lapack_int want = hi - lo + 1;
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, want);
  std::vector<lapack_int> support(2 * std::size_t(want));
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0, lo, hi, 0.0,
                     &found, w.data(), z.data(), n, support.data());
  if (info != 0 || found != want)
    throw SolverFailure("dsyevr failed with info=" + std::to_string(info),
                        std::numeric_limits<double>::infinity());
  std::vector<Pair> out;
  out.reserve(std::size_t(want));
  for (lapack_int c = 0; c < want; ++c) out.push_back({w(c), z.col(c)});
  return out;
}

Eigen::Index first_nonzero(const Eigen::VectorXd& v) {
  const double cut = 1e-10 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > cut) return i;
  return v.size();
}

}  // namespace

EigenResult top_k_abs_eigenpairs(const SymmetricMatrix& m, std::size_t k, double tol) {
  const std::size_t n = m.size();
  if (k < 1 || k > n)
    throw InvalidParams("top_k_abs_eigenpairs: need 1 <= k <= n, got k=" + std::to_string(k));

  std::vector<Pair> cand;
  if (2 * k >= n) {
    cand = eigen_range(m, 1, lapack_int(n));
  } else {
    cand = eigen_range(m, 1, lapack_int(k));
    auto top = eigen_range(m, lapack_int(n - k + 1), lapack_int(n));
    cand.insert(cand.end(), std::make_move_iterator(top.begin()), std::make_move_iterator(top.end()));
  }

  double norm = 0.0;
  for (const auto& p : cand) norm = std::max(norm, std::abs(p.value));
  for (auto& p : cand)
    if (Eigen::Index f = first_nonzero(p.vector); f < p.vector.size() && p.vector(f) < 0.0)
      p.vector = -p.vector;

  const double tie = 64.0 * std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);
  std::stable_sort(cand.begin(), cand.end(), [&](const Pair& a, const Pair& b) {
    const double da = std::abs(a.value);
    const double db = std::abs(b.value);
    if (std::abs(da - db) > tie) return da > db;
    if (std::abs(a.value - b.value) > tie) return a.value > b.value;
    return first_nonzero(a.vector) < first_nonzero(b.vector);
  });

  EigenResult r{Eigen::VectorXd(Eigen::Index(k)), Eigen::MatrixXd(Eigen::Index(n), Eigen::Index(k))};
  for (std::size_t c = 0; c < k; ++c) {
    const auto& p = cand[c];
    const double residual = (m.dense() * p.vector - p.value * p.vector).norm();
    if (residual > tol * std::max(norm, std::numeric_limits<double>::min()) && residual > 0.0)
      throw SolverFailure("eigenpair residual " + std::to_string(residual) + " exceeds tolerance",
                          residual);
    r.values(Eigen::Index(c)) = p.value;
    r.vectors.col(Eigen::Index(c)) = p.vector;
  }
  return r;
}

namespace {

SymmetricMatrix scale_by_degree(const SymmetricMatrix& a, double tau) {
  const auto& d = a.dense();
  if ((d.array() < 0.0).any()) throw InvalidInput("laplacian: adjacency has negative entries");
  const Eigen::VectorXd deg = d.rowwise().sum();
  Eigen::VectorXd s(deg.size());
  for (Eigen::Index i = 0; i < deg.size(); ++i) {
    const double v = deg(i) + tau;
    s(i) = v > 0.0 ? 1.0 / std::sqrt(v) : 0.0;
  }
  Eigen::MatrixXd out = s.asDiagonal() * d * s.asDiagonal();
  // Restore exact symmetry lost to rounding in the two products.
  for (Eigen::Index j = 0; j < out.cols(); ++j)
    for (Eigen::Index i = j + 1; i < out.rows(); ++i) out(j, i) = out(i, j);
  return SymmetricMatrix::from_dense(std::move(out));
}

}  // namespace

SymmetricMatrix normalized_laplacian(const SymmetricMatrix& a) { return scale_by_degree(a, 0.0); }

SymmetricMatrix regularized_laplacian(const SymmetricMatrix& a, std::optional<double> tau) {
  const double t = tau ? *tau : a.dense().sum() / double(a.size());
  if (t < 0.0) throw InvalidParams("regularized_laplacian: tau must be >= 0");
  return scale_by_degree(a, t);
}

Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& v) {
  Eigen::MatrixXd out = v;
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    if (double nrm = out.row(i).norm(); nrm > 0.0) out.row(i) /= nrm;
  return out;
}

double kmeans_objective(const Eigen::MatrixXd& points, std::span<const int> labels, int k) {
  Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(k, points.cols());
  std::vector<std::size_t> count(std::size_t(k), 0);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    centers.row(labels[std::size_t(i)]) += points.row(i);
    ++count[std::size_t(labels[std::size_t(i)])];
  }
  for (int c = 0; c < k; ++c)
    if (count[std::size_t(c)]) centers.row(c) /= double(count[std::size_t(c)]);
  double total = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i)
    total += (points.row(i) - centers.row(labels[std::size_t(i)])).squaredNorm();
  return total;
}

namespace {

constexpr std::size_t kMaxLloydIterations = 300;
constexpr double kLloydRelTol = 1e-9;

Eigen::MatrixXd seed_plus_plus(const Eigen::MatrixXd& x, std::size_t k, RandomStream& rng) {
  const auto n = x.rows();
  Eigen::MatrixXd centers(Eigen::Index(k), x.cols());
  centers.row(0) = x.row(Eigen::Index(rng.below(std::uint64_t(n))));
  Eigen::VectorXd d2(n);
  for (Eigen::Index i = 0; i < n; ++i) d2(i) = (x.row(i) - centers.row(0)).squaredNorm();
  for (std::size_t c = 1; c < k; ++c) {
    const double total = d2.sum();
    Eigen::Index pick = n - 1;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2(i);
        if (acc > target && d2(i) > 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = Eigen::Index(rng.below(std::uint64_t(n)));
    }
    centers.row(Eigen::Index(c)) = x.row(pick);
    for (Eigen::Index i = 0; i < n; ++i)
      d2(i) = std::min(d2(i), (x.row(i) - centers.row(Eigen::Index(c))).squaredNorm());
  }
  return centers;
}

struct LloydRun {
  std::vector<int> labels;
  double objective;
  std::vector<double> history;
};

LloydRun lloyd(const Eigen::MatrixXd& x, Eigen::MatrixXd centers) {
  const auto n = x.rows();
  const auto k = centers.rows();
  LloydRun run{std::vector<int>(std::size_t(n), 0), 0.0, {}};
  Eigen::VectorXd dist(n);
  double previous = std::numeric_limits<double>::infinity();

  for (std::size_t it = 0; it < kMaxLloydIterations; ++it) {
    double objective = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (x.row(i) - centers.row(0)).squaredNorm();
      for (Eigen::Index c = 1; c < k; ++c) {
        const double d = (x.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = int(c);
        }
      }
      run.labels[std::size_t(i)] = best;
      dist(i) = best_d;
      objective += best_d;
    }

    std::vector<std::size_t> count(std::size_t(k), 0);
    for (int l : run.labels) ++count[std::size_t(l)];
    for (Eigen::Index c = 0; c < k; ++c) {
      if (count[std::size_t(c)] != 0) continue;
      Eigen::Index far = -1;
      for (Eigen::Index i = 0; i < n; ++i)
        if (count[std::size_t(run.labels[std::size_t(i)])] > 1 && (far < 0 || dist(i) > dist(far)))
          far = i;
      if (far < 0) break;
      --count[std::size_t(run.labels[std::size_t(far)])];
      run.labels[std::size_t(far)] = int(c);
      count[std::size_t(c)] = 1;
      objective -= dist(far);
      dist(far) = 0.0;
    }
    run.history.push_back(objective);

    centers.setZero();
    for (Eigen::Index i = 0; i < n; ++i) centers.row(run.labels[std::size_t(i)]) += x.row(i);
    for (Eigen::Index c = 0; c < k; ++c)
      if (count[std::size_t(c)]) centers.row(c) /= double(count[std::size_t(c)]);

    const double change = previous - objective;
    previous = objective;
    if (change <= kLloydRelTol * std::max(objective, std::numeric_limits<double>::min())) break;
  }
  run.objective = kmeans_objective(x, run.labels, int(k));
  return run;
}

}  // namespace

KMeansResult kmeans_fit(const Eigen::MatrixXd& points, std::size_t k, std::size_t restarts,
                        std::uint64_t seed) {
  if (k < 1 || k > std::size_t(points.rows()))
    throw InvalidParams("kmeans: need 1 <= k <= n, got k=" + std::to_string(k));
  if (restarts < 1) throw InvalidParams("kmeans: restarts must be >= 1");

  KMeansResult best;
  best.objective = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < restarts; ++r) {
    RandomStream rng(derive_seed(seed, std::uint64_t(r)));
    auto run = lloyd(points, seed_plus_plus(points, k, rng));
    if (run.objective < best.objective) {
      best.labels = std::move(run.labels);
      best.objective = run.objective;
      best.best_restart = r;
      best.history = std::move(run.history);
    }
  }
  return best;
}

CommunityAssignment kmeans(const Eigen::MatrixXd& points, std::size_t k, std::size_t restarts,
                           std::uint64_t seed) {
  return CommunityAssignment(kmeans_fit(points, k, restarts, seed).labels, int(k));
}

ClusterMethod ClusterMethod::named(std::string_view name) {
  ClusterMethod m;
  std::string_view rest = name;
  if (rest.starts_with("ho")) {
    m.base = BaseMatrix::weighted_edge_triangle;
    rest.remove_prefix(2);
  }
  if (rest == "spA") {
    m.transform = Transform::none;
  } else if (rest == "spL") {
    m.transform = Transform::normalized_laplacian;
  } else if (rest == "rspL") {
    m.transform = Transform::regularized_laplacian;
  } else {
    throw InvalidParams("unknown cluster method '" + std::string(name) + "'");
  }
  return m;
}

std::string ClusterMethod::name() const {
  if (!row_normalize || (base == BaseMatrix::weighted_edge_triangle && weight != 1.0)) return "custom";
  const std::string prefix = base == BaseMatrix::weighted_edge_triangle ? "ho" : "";
  switch (transform) {
    case Transform::none: return prefix + "spA";
    case Transform::normalized_laplacian: return prefix + "spL";
    case Transform::regularized_laplacian: return prefix + "rspL";
  }
  return "custom";
}

const std::vector<std::string>& standard_method_names() {
  static const std::vector<std::string> names{"spA", "hospA", "spL", "hospL", "rspL", "horspL"};
  return names;
}

SymmetricMatrix weighted_hyperedge_matrix(const SymmetricMatrix& a_edge, const SymmetricMatrix& a_tri,
                                          double w) {
  if (a_edge.size() != a_tri.size())
    throw DimensionMismatch("weighted_hyperedge_matrix: dimensions differ");
  if (w < 0.0) throw InvalidParams("weighted_hyperedge_matrix: weight must be >= 0");
  return a_edge + w * a_tri;
}

SymmetricMatrix method_base_matrix(const SuperimposedGraph& g, const ClusterMethod& method) {
  auto a_e = multiplicity_matrix(g);
  if (method.base == BaseMatrix::edge_adjacency) return a_e;
  return weighted_hyperedge_matrix(a_e, triangle_motif_observed(simple_projection(g)), method.weight);
}

SymmetricMatrix apply_transform(const SymmetricMatrix& m, Transform t, std::optional<double> tau) {
  switch (t) {
    case Transform::none: return m;
    case Transform::normalized_laplacian: return normalized_laplacian(m);
    case Transform::regularized_laplacian: return regularized_laplacian(m, tau);
  }
  return m;
}

Eigen::MatrixXd spectral_embedding(const SymmetricMatrix& m, std::size_t k, bool row_norm,
                                   const ClusterOptions& opts) {
  auto eig = top_k_abs_eigenpairs(m, k, opts.eig_tol);
  return row_norm ? row_normalize(eig.vectors) : std::move(eig.vectors);
}

CommunityAssignment spectral_cluster_matrix(const SymmetricMatrix& m, std::size_t k, bool row_norm,
                                            std::uint64_t seed, const ClusterOptions& opts) {
  return kmeans(spectral_embedding(m, k, row_norm, opts), k, opts.restarts, seed);
}

CommunityAssignment cluster(const SuperimposedGraph& g, const ClusterMethod& method, std::size_t k,
                            std::uint64_t seed, const ClusterOptions& opts) {
  const auto m = apply_transform(method_base_matrix(g, method), method.transform, opts.tau);
  return spectral_cluster_matrix(m, k, method.row_normalize, seed, opts);
}

}  // namespace motifspectra
