#pragma once

// Random graph generators: classical SBM, 3-uniform hypergraph SBM, the
// superimposed SBM and its non-uniform hypergraph reading, and the general
// inhomogeneous superimposed model. Every generator is a pure function of its
// parameters and seed.

#include <cstdint>
#include <functional>

#include "motifspectra/graph_model.hpp"

namespace motifspectra {

/// Edge and hyperedge probabilities as functions, so the n^3 triangle tensor
/// never has to be materialized. Both must be symmetric in their arguments.
struct ProbabilityProvider {
  std::function<double(Vertex, Vertex)> edge_prob;
  std::function<double(Vertex, Vertex, Vertex)> triangle_prob;
};

ProbabilityProvider constant_provider(double p_edge, double p_triangle);

/// Block-constant provider matching the balanced SupSBM parameterization.
ProbabilityProvider block_provider(const BlockParams& p, const CommunityAssignment& c);

struct GrowthWindow {
  double p_e_max = 0.0;
  double p_t_max = 0.0;
  double epsilon = 0.05;
};

/// Each sparsity condition evaluated separately with unit constants:
///   log n / n <= p_e_max < n^{2/5-eps} / n
///   (log n)^8 / n^2 < p_t_max < n^{2/5-eps} / n^2
///   p_t_max > p_e_max log n / n
struct GrowthWindowReport {
  double p_e_max = 0.0;
  double p_t_max = 0.0;
  bool edge_lower = false;
  bool edge_upper = false;
  bool triangle_lower = false;
  bool triangle_upper = false;
  bool coupling = false;

  bool within_window() const {
    return edge_lower && edge_upper && triangle_lower && triangle_upper && coupling;
  }
};

/// Vertices 0..n/k-1 get label 0, the next n/k label 1, and so on.
/// Throws InvalidParams when k does not divide n.
CommunityAssignment gen_balanced_assignment(std::size_t n, std::size_t k);

/// Dyadic edges only.
SuperimposedGraph gen_sbm(const BlockParams& p, const CommunityAssignment& c, std::uint64_t seed);

/// Triangle hyperedges only.
SuperimposedGraph gen_hypergraph_3uniform(const BlockParams& p, const CommunityAssignment& c,
                                          std::uint64_t seed);

/// Union of gen_sbm and gen_hypergraph_3uniform with the same seed: the two
/// processes draw from disjoint sub-streams, so each marginal equals the
/// corresponding standalone generator output exactly.
SuperimposedGraph gen_supsbm(const BlockParams& p, const CommunityAssignment& c, std::uint64_t seed);

/// Same sampling law as gen_supsbm. Consumers treat dyadic edges and
/// hyperedges as separately observed instead of reading the collapsed graph.
SuperimposedGraph gen_nonuniform_hypergraph_sbm(const BlockParams& p, const CommunityAssignment& c,
                                                std::uint64_t seed);

/// One independent Bernoulli draw per pair and per triple. O(n^3); intended
/// for small n or non-block probability structures.
SuperimposedGraph gen_inhomogeneous(std::size_t n, const ProbabilityProvider& pp, std::uint64_t seed);

GrowthWindowReport check_growth_window(std::size_t n, const GrowthWindow& w);

/// Uses p_e_max = max(a_e, b_e)/n and p_t_max = max(a_t, b_t)/n.
GrowthWindowReport check_growth_window(const BlockParams& p, double epsilon);

}  // namespace motifspectra
