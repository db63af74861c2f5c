#include "motifspectra/estimators.hpp"

#include <algorithm>
#include <string>

#include "motifspectra/errors.hpp"

namespace motifspectra {

namespace {

double choose2(double m) { return m * (m - 1.0) / 2.0; }
double choose3(double m) { return m * (m - 1.0) * (m - 2.0) / 6.0; }

void check_labels(const SuperimposedGraph& g, const CommunityAssignment& labels) {
  if (labels.size() != g.num_vertices())
    throw DimensionMismatch("estimate_block_params: label count differs from vertex count");
  const auto sizes = labels.community_sizes();
  if (std::count_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 0; }) < 2)
    throw InvalidParams("estimate_block_params: need at least two nonempty clusters");
}

double density(double count, double slots, const char* what) {
  if (!(slots > 0.0)) throw UndefinedEstimate(std::string("no ") + what + " slots under this labeling");
  return count / slots;
}

}  // namespace

double estimate_delta(std::size_t n, double avg_edge_degree, double avg_triangle_degree) {
  if (!(avg_triangle_degree > 0.0))
    throw UndefinedEstimate("estimate_delta: average triangle degree is zero");
  return double(n) * avg_edge_degree / avg_triangle_degree;
}

double estimate_delta(const SuperimposedGraph& g) {
  const double n = double(g.num_vertices());
  // Each edge adds 2 to the total edge degree; each hyperedge adds 2 to the
  // A_{T^2} row sum of each of its three vertices.
  const double edge_deg = 2.0 * double(g.dyadic_edges().size()) / n;
  const double tri_deg = 6.0 * double(g.hyperedges().size()) / n;
  return estimate_delta(g.num_vertices(), edge_deg, tri_deg);
}

BlockEstimates estimate_edge_params(const SuperimposedGraph& g, const CommunityAssignment& labels) {
  check_labels(g, labels);
  const double n = double(g.num_vertices());
  double within_slots = 0.0;
  for (auto s : labels.community_sizes()) within_slots += choose2(double(s));
  const double across_slots = choose2(n) - within_slots;
  double within = 0.0;
  for (const auto& e : g.dyadic_edges()) within += labels[e[0]] == labels[e[1]] ? 1.0 : 0.0;
  const double across = double(g.dyadic_edges().size()) - within;
  BlockEstimates r;
  r.a_e = n * density(within, within_slots, "within-cluster pair");
  r.b_e = n * density(across, across_slots, "cross-cluster pair");
  return r;
}

BlockEstimates estimate_triangle_params(const SuperimposedGraph& g, const CommunityAssignment& labels) {
  check_labels(g, labels);
  const double n = double(g.num_vertices());
  double same_slots = 0.0;
  for (auto s : labels.community_sizes()) same_slots += choose3(double(s));
  const double other_slots = choose3(n) - same_slots;
  double same = 0.0;
  for (const auto& t : g.hyperedges())
    same += labels[t[0]] == labels[t[1]] && labels[t[1]] == labels[t[2]] ? 1.0 : 0.0;
  const double other = double(g.hyperedges().size()) - same;
  BlockEstimates r;
  r.a_t = n * density(same, same_slots, "same-cluster triple");
  r.b_t = n * density(other, other_slots, "mixed-cluster triple");
  return r;
}

BlockEstimates estimate_block_params(const SuperimposedGraph& g, const CommunityAssignment& labels) {
  auto r = estimate_edge_params(g, labels);
  const auto t = estimate_triangle_params(g, labels);
  r.a_t = t.a_t;
  r.b_t = t.b_t;
  return r;
}

double estimate_m(double delta_hat, const BlockEstimates& p) {
  if (p.a_e == p.b_e) throw UndefinedEstimate("estimate_m: a_e - b_e is zero");
  return delta_hat * (p.a_t - p.b_t) / (p.a_e - p.b_e);
}

std::string_view to_string(Recommendation r) {
  switch (r) {
    case Recommendation::edges: return "edges";
    case Recommendation::triangles: return "triangles";
    case Recommendation::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

TradeoffReport tradeoff_decision(double delta_hat, double m_hat, std::size_t n, double margin) {
  TradeoffReport r;
  r.delta_hat = delta_hat;
  r.m_hat = m_hat;
  if (m_hat == 0.0 || n == 0) {
    r.m_zero = m_hat == 0.0;
    return r;
  }
  r.criterion = delta_hat / (m_hat * m_hat * double(n));
  if (r.criterion < 1.0 - margin) {
    r.recommendation = Recommendation::triangles;
  } else if (r.criterion > 1.0 + margin) {
    r.recommendation = Recommendation::edges;
  }
  return r;
}

}  // namespace motifspectra
