#pragma once

// Core types shared by the generators, motif counting, and clustering code:
// dense symmetric matrices, community labelings, balanced block parameters,
// and the superimposed edge/triangle graph.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace motifspectra {

using Vertex = std::uint32_t;
using VertexPair = std::array<Vertex, 2>;
using VertexTriple = std::array<Vertex, 3>;

/// Dense n x n real matrix whose entries satisfy (i,j) == (j,i) exactly.
/// Every mutation writes both halves, so symmetry cannot drift.
class SymmetricMatrix {
 public:
  /// Zero matrix of dimension n (n >= 1).
  explicit SymmetricMatrix(std::size_t n);

  /// Takes ownership of a dense matrix; throws InvalidInput unless it is
  /// square, non-empty and exactly symmetric.
  static SymmetricMatrix from_dense(Eigen::MatrixXd m);

  std::size_t size() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return m_(Index(i), Index(j)); }

  void set(std::size_t i, std::size_t j, double v);
  void add(std::size_t i, std::size_t j, double v);

  const Eigen::MatrixXd& dense() const noexcept { return m_; }

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix& operator-=(const SymmetricMatrix& other);
  SymmetricMatrix& operator*=(double s);

  friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
  friend SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) { return a -= b; }
  friend SymmetricMatrix operator*(SymmetricMatrix a, double s) { return a *= s; }
  friend SymmetricMatrix operator*(double s, SymmetricMatrix a) { return a *= s; }
  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  using Index = Eigen::Index;
  struct Trusted {};
  SymmetricMatrix(Eigen::MatrixXd m, Trusted) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

/// Community labels in [0, k) for vertices 0..n-1.
class CommunityAssignment {
 public:
  CommunityAssignment(std::vector<int> labels, int k);

  std::size_t size() const noexcept { return labels_.size(); }
  int k() const noexcept { return k_; }
  int operator[](std::size_t i) const { return labels_[i]; }
  std::span<const int> labels() const noexcept { return labels_; }

  /// Number of vertices carrying each label.
  std::vector<std::size_t> community_sizes() const;
  /// Vertex ids grouped by label, each group ascending.
  std::vector<std::vector<Vertex>> members() const;
  /// True when every community has exactly n/k vertices.
  bool balanced() const;

  friend bool operator==(const CommunityAssignment&, const CommunityAssignment&) = default;

 private:
  std::vector<int> labels_;
  int k_;
};

/// Balanced k-block model. Within-block edges have probability a_e/n and
/// cross-block edges b_e/n; hyperedges with all three endpoints in one block
/// have probability a_t/n, all others b_t/n.
struct BlockParams {
  std::size_t n = 0;
  std::size_t k = 1;
  double a_e = 0.0;
  double b_e = 0.0;
  double a_t = 0.0;
  double b_t = 0.0;

  /// Throws InvalidParams unless k | n and 0 <= b <= a <= n for both processes.
  void validate() const;

  double p_edge_within() const noexcept { return a_e / double(n); }
  double p_edge_across() const noexcept { return b_e / double(n); }
  double p_triangle_within() const noexcept { return a_t / double(n); }
  double p_triangle_across() const noexcept { return b_t / double(n); }
  std::size_t block_size() const noexcept { return n / k; }

  friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

/// Superposition of a dyadic edge set and a set of triangle hyperedges.
/// Pairs and triples are stored canonically (ascending tuples, sorted lists),
/// so two graphs compare equal iff they have the same edges and hyperedges.
class SuperimposedGraph {
 public:
  /// Validates ranges and distinctness; duplicates collapse. Throws InvalidInput.
  SuperimposedGraph(std::size_t n, std::vector<VertexPair> dyadic_edges,
                    std::vector<VertexTriple> hyperedges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::span<const VertexPair> dyadic_edges() const noexcept { return dyadic_; }
  std::span<const VertexTriple> hyperedges() const noexcept { return hyper_; }

  bool has_dyadic_edge(Vertex i, Vertex j) const { return dyadic_flag_[slot(i, j)] != 0; }
  bool has_hyperedge(Vertex i, Vertex j, Vertex k) const;
  /// Number of hyperedges containing both i and j.
  std::uint32_t triangle_cover_count(Vertex i, Vertex j) const { return cover_[slot(i, j)]; }
  /// 1(dyadic edge) + 1(cover count > 0), in {0, 1, 2}.
  int multiplicity(Vertex i, Vertex j) const {
    return int(has_dyadic_edge(i, j)) + int(triangle_cover_count(i, j) > 0);
  }

  friend bool operator==(const SuperimposedGraph& a, const SuperimposedGraph& b) {
    return a.n_ == b.n_ && a.dyadic_ == b.dyadic_ && a.hyper_ == b.hyper_;
  }

 private:
  std::size_t slot(Vertex i, Vertex j) const noexcept { return std::size_t(i) * n_ + j; }

  std::size_t n_;
  std::vector<VertexPair> dyadic_;
  std::vector<VertexTriple> hyper_;
  std::vector<std::uint8_t> dyadic_flag_;
  std::vector<std::uint32_t> cover_;
};

/// 0/1 matrix of the observed simple graph: 1 wherever multiplicity >= 1.
SymmetricMatrix simple_projection(const SuperimposedGraph& g);

/// A_E: entry (i,j) is the number of observed edges between i and j.
SymmetricMatrix multiplicity_matrix(const SuperimposedGraph& g);

/// Row sums.
Eigen::VectorXd degree_vector(const SymmetricMatrix& m);

}  // namespace motifspectra
