#pragma once

// Plug-in estimates of the edge/triangle density ratio (delta) and the
// relative community signal (m) under the non-uniform hypergraph SBM, and
// the resulting choice between edge- and triangle-based clustering.

#include <cstddef>
#include <string_view>

#include "motifspectra/graph_model.hpp"

namespace motifspectra {

/// n * (average edge degree) / (average triangle degree), reading dyadic
/// edges and hyperedges as separately observed. The triangle degree of i is
/// the row sum of A_{T^2}. Throws UndefinedEstimate without hyperedges.
double estimate_delta(const SuperimposedGraph& g);

/// Same estimator from precomputed averages.
double estimate_delta(std::size_t n, double avg_edge_degree, double avg_triangle_degree);

struct BlockEstimates {
  double a_e = 0.0;
  double b_e = 0.0;
  double a_t = 0.0;
  double b_t = 0.0;
};

/// n times the within/cross edge densities under `labels`; fills a_e, b_e.
BlockEstimates estimate_edge_params(const SuperimposedGraph& g, const CommunityAssignment& labels);

/// n times the all-same-cluster / remaining hyperedge densities; fills a_t, b_t.
BlockEstimates estimate_triangle_params(const SuperimposedGraph& g, const CommunityAssignment& labels);

/// Both halves under one labeling. Requires at least two nonempty clusters;
/// throws UndefinedEstimate when a density has an empty denominator.
BlockEstimates estimate_block_params(const SuperimposedGraph& g, const CommunityAssignment& labels);

/// delta_hat (a_t - b_t) / (a_e - b_e). Throws UndefinedEstimate if a_e == b_e.
double estimate_m(double delta_hat, const BlockEstimates& params);

enum class Recommendation { edges, triangles, indeterminate };

std::string_view to_string(Recommendation r);

struct TradeoffReport {
  double delta_hat = 0.0;
  double m_hat = 0.0;
  double criterion = 0.0;  ///< delta / (m^2 n)
  Recommendation recommendation = Recommendation::indeterminate;
  bool m_zero = false;  ///< criterion undefined because m_hat == 0
};

/// triangles when criterion < 1 - margin, edges when > 1 + margin.
TradeoffReport tradeoff_decision(double delta_hat, double m_hat, std::size_t n, double margin = 0.1);

}  // namespace motifspectra
