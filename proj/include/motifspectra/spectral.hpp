#pragma once

// Spectral clustering: matrix variants, leading eigenpairs by absolute
// eigenvalue, row normalization, and multi-restart k-means.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "motifspectra/graph_model.hpp"

namespace motifspectra {

/// k eigenpairs ordered by descending |value|. Ties in |value| put the larger
/// signed value first, then the vector whose first nonzero component comes
/// earlier. Each vector is signed so its first nonzero component is positive.
struct EigenResult {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  ///< n x k, orthonormal columns
};

/// Throws InvalidParams unless 1 <= k <= n, and SolverFailure when some pair
/// has residual ||M v - l v|| > tol * ||M||.
EigenResult top_k_abs_eigenpairs(const SymmetricMatrix& m, std::size_t k, double tol = 1e-10);

/// D^{-1/2} A D^{-1/2}; rows and columns of zero-degree vertices are zero.
/// Throws InvalidInput on negative entries.
SymmetricMatrix normalized_laplacian(const SymmetricMatrix& a);

/// (D + tau I)^{-1/2} A (D + tau I)^{-1/2}; tau defaults to the mean degree.
SymmetricMatrix regularized_laplacian(const SymmetricMatrix& a, std::optional<double> tau = std::nullopt);

/// Scales every nonzero row to unit Euclidean norm.
Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& v);

/// Within-cluster sum of squared distances to the cluster means.
double kmeans_objective(const Eigen::MatrixXd& points, std::span<const int> labels, int k);

struct KMeansResult {
  std::vector<int> labels;
  double objective = 0.0;
  std::size_t best_restart = 0;
  /// Objective after each assignment step of the winning restart.
  std::vector<double> history;
};

/// Best of `restarts` k-means++ seeded Lloyd runs. Each run stops when the
/// relative objective change drops below 1e-9 or after 300 iterations; an
/// empty cluster takes the point farthest from its current center. Ties on
/// the objective go to the lowest restart index.
KMeansResult kmeans_fit(const Eigen::MatrixXd& points, std::size_t k, std::size_t restarts,
                        std::uint64_t seed);

CommunityAssignment kmeans(const Eigen::MatrixXd& points, std::size_t k, std::size_t restarts,
                           std::uint64_t seed);

enum class BaseMatrix { edge_adjacency, weighted_edge_triangle };
enum class Transform { none, normalized_laplacian, regularized_laplacian };

struct ClusterMethod {
  BaseMatrix base = BaseMatrix::edge_adjacency;
  Transform transform = Transform::none;
  double weight = 1.0;  ///< triangle weight w in A_E + w A_T
  bool row_normalize = true;

  /// spA, spL, rspL, hospA, hospL or horspL; throws InvalidParams otherwise.
  static ClusterMethod named(std::string_view name);
  /// Name for the six standard variants, "custom" otherwise.
  std::string name() const;
};

/// The six standard variants in table order.
const std::vector<std::string>& standard_method_names();

struct ClusterOptions {
  std::size_t restarts = 20;
  double eig_tol = 1e-10;
  std::optional<double> tau;  ///< regularizer; mean degree when empty
};

/// A_E + w A_T with A_T counted on the observed simple graph.
SymmetricMatrix weighted_hyperedge_matrix(const SymmetricMatrix& a_edge, const SymmetricMatrix& a_tri,
                                          double w);

/// Base matrix for a method: A_E, or A_E + w A_T.
SymmetricMatrix method_base_matrix(const SuperimposedGraph& g, const ClusterMethod& method);

SymmetricMatrix apply_transform(const SymmetricMatrix& m, Transform t, std::optional<double> tau);

/// Leading k eigenvectors by |eigenvalue| as rows of points, optionally row-normalized.
Eigen::MatrixXd spectral_embedding(const SymmetricMatrix& m, std::size_t k, bool row_norm,
                                   const ClusterOptions& opts = {});

/// spectral_embedding followed by k-means.
CommunityAssignment spectral_cluster_matrix(const SymmetricMatrix& m, std::size_t k, bool row_norm,
                                            std::uint64_t seed, const ClusterOptions& opts = {});

CommunityAssignment cluster(const SuperimposedGraph& g, const ClusterMethod& method, std::size_t k,
                            std::uint64_t seed, const ClusterOptions& opts = {});

}  // namespace motifspectra
