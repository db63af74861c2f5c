#include "motifspectra/graph_model.hpp"

#include <algorithm>
#include <string>

#include "motifspectra/errors.hpp"

namespace motifspectra {

SymmetricMatrix::SymmetricMatrix(std::size_t n) {
  if (n == 0) throw InvalidParams("SymmetricMatrix: dimension must be >= 1");
  m_ = Eigen::MatrixXd::Zero(Index(n), Index(n));
}

SymmetricMatrix SymmetricMatrix::from_dense(Eigen::MatrixXd m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw InvalidInput("SymmetricMatrix: input must be square and non-empty");
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = j + 1; i < m.rows(); ++i)
      if (m(i, j) != m(j, i))
        throw InvalidInput("SymmetricMatrix: input is not exactly symmetric at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
  return SymmetricMatrix(std::move(m), Trusted{});
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  m_(Index(i), Index(j)) = v;
  m_(Index(j), Index(i)) = v;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double v) {
  m_(Index(i), Index(j)) += v;
  if (i != j) m_(Index(j), Index(i)) += v;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  if (other.size() != size()) throw DimensionMismatch("SymmetricMatrix: dimension mismatch in +");
  m_ += other.m_;
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& other) {
  if (other.size() != size()) throw DimensionMismatch("SymmetricMatrix: dimension mismatch in -");
  m_ -= other.m_;
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

CommunityAssignment::CommunityAssignment(std::vector<int> labels, int k)
    : labels_(std::move(labels)), k_(k) {
  if (k_ < 1) throw InvalidParams("CommunityAssignment: k must be >= 1");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] < 0 || labels_[i] >= k_)
      throw InvalidInput("CommunityAssignment: label " + std::to_string(labels_[i]) +
                         " at vertex " + std::to_string(i) + " outside [0, k)");
}

std::vector<std::size_t> CommunityAssignment::community_sizes() const {
  std::vector<std::size_t> sizes(std::size_t(k_), 0);
  for (int l : labels_) ++sizes[std::size_t(l)];
  return sizes;
}

std::vector<std::vector<Vertex>> CommunityAssignment::members() const {
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(k_));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    groups[std::size_t(labels_[i])].push_back(Vertex(i));
  return groups;
}

bool CommunityAssignment::balanced() const {
  if (labels_.size() % std::size_t(k_) != 0) return false;
  const auto target = labels_.size() / std::size_t(k_);
  const auto sizes = community_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == target; });
}

void BlockParams::validate() const {
  if (n == 0 || k == 0) throw InvalidParams("BlockParams: n and k must be positive");
  if (n % k != 0)
    throw InvalidParams("BlockParams: n=" + std::to_string(n) + " not divisible by k=" +
                        std::to_string(k));
  const double dn = double(n);
  auto check = [&](double a, double b, const char* what) {
    if (!(b >= 0.0 && b <= a && a <= dn))
      throw InvalidParams(std::string("BlockParams: need 0 <= b <= a <= n for ") + what);
  };
  check(a_e, b_e, "edges");
  check(a_t, b_t, "triangles");
}

namespace {

VertexPair canonical(VertexPair p) {
  if (p[0] > p[1]) std::swap(p[0], p[1]);
  return p;
}

VertexTriple canonical(VertexTriple t) {
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

SuperimposedGraph::SuperimposedGraph(std::size_t n, std::vector<VertexPair> dyadic_edges,
                                     std::vector<VertexTriple> hyperedges)
    : n_(n), dyadic_(std::move(dyadic_edges)), hyper_(std::move(hyperedges)) {
  if (n_ == 0) throw InvalidInput("SuperimposedGraph: n must be positive");
  for (auto& e : dyadic_) {
    e = canonical(e);
    if (e[0] == e[1]) throw InvalidInput("SuperimposedGraph: self-loop on vertex " + std::to_string(e[0]));
    if (e[1] >= n_) throw InvalidInput("SuperimposedGraph: edge endpoint out of range");
  }
  for (auto& t : hyper_) {
    t = canonical(t);
    if (t[0] == t[1] || t[1] == t[2])
      throw InvalidInput("SuperimposedGraph: hyperedge with repeated vertex");
    if (t[2] >= n_) throw InvalidInput("SuperimposedGraph: hyperedge vertex out of range");
  }
  std::sort(dyadic_.begin(), dyadic_.end());
  dyadic_.erase(std::unique(dyadic_.begin(), dyadic_.end()), dyadic_.end());
  std::sort(hyper_.begin(), hyper_.end());
  hyper_.erase(std::unique(hyper_.begin(), hyper_.end()), hyper_.end());

  dyadic_flag_.assign(n_ * n_, 0);
  cover_.assign(n_ * n_, 0);
  for (const auto& e : dyadic_) {
    dyadic_flag_[slot(e[0], e[1])] = 1;
    dyadic_flag_[slot(e[1], e[0])] = 1;
  }
  for (const auto& t : hyper_) {
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}}) {
      ++cover_[slot(a, b)];
      ++cover_[slot(b, a)];
    }
  }
}

bool SuperimposedGraph::has_hyperedge(Vertex i, Vertex j, Vertex k) const {
  return std::binary_search(hyper_.begin(), hyper_.end(), canonical(VertexTriple{i, j, k}));
}

SymmetricMatrix simple_projection(const SuperimposedGraph& g) {
  const auto n = g.num_vertices();
  SymmetricMatrix a(n);
  for (const auto& e : g.dyadic_edges()) a.set(e[0], e[1], 1.0);
  for (const auto& t : g.hyperedges()) {
    a.set(t[0], t[1], 1.0);
    a.set(t[1], t[2], 1.0);
    a.set(t[0], t[2], 1.0);
  }
  return a;
}

SymmetricMatrix multiplicity_matrix(const SuperimposedGraph& g) {
  const auto n = g.num_vertices();
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (int m = g.multiplicity(Vertex(i), Vertex(j)); m != 0) a.set(i, j, double(m));
  return a;
}

Eigen::VectorXd degree_vector(const SymmetricMatrix& m) { return m.dense().rowwise().sum(); }

}  // namespace motifspectra
