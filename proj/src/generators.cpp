#include "motifspectra/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "motifspectra/errors.hpp"
#include "motifspectra/rng.hpp"

namespace motifspectra {

namespace {

constexpr std::string_view kDyadicTag = "dyadic";
constexpr std::string_view kTriadicTag = "triadic";

std::uint64_t choose2(std::uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }
std::uint64_t choose3(std::uint64_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

// Colex unranking: rank = C(hi,2) + lo with lo < hi.
VertexPair unrank_pair(std::uint64_t r) {
  auto hi = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * double(r))) / 2.0);
  while (choose2(hi) > r) --hi;
  while (choose2(hi + 1) <= r) ++hi;
  return {Vertex(r - choose2(hi)), Vertex(hi)};
}

// Colex unranking: rank = C(c,3) + C(b,2) + a with a < b < c.
VertexTriple unrank_triple(std::uint64_t r) {
  auto c = static_cast<std::uint64_t>(std::cbrt(6.0 * double(r))) + 2;
  while (choose3(c) > r) --c;
  while (choose3(c + 1) <= r) ++c;
  const auto [a, b] = unrank_pair(r - choose3(c));
  return {a, b, Vertex(c)};
}

void check_assignment(const BlockParams& p, const CommunityAssignment& c) {
  p.validate();
  if (c.size() != p.n || std::size_t(c.k()) != p.k)
    throw InvalidParams("generator: assignment has n=" + std::to_string(c.size()) + ", k=" +
                        std::to_string(c.k()) + " but params have n=" + std::to_string(p.n) +
                        ", k=" + std::to_string(p.k));
}

// Within-block pairs are drawn block by block over each block's own index
// space; cross pairs over the full index space, discarding same-block hits
// (those pairs already have their own draw).
std::vector<VertexPair> sample_block_pairs(const BlockParams& p, const CommunityAssignment& c,
                                           std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<VertexPair> edges;
  const auto groups = c.members();
  for (const auto& g : groups)
    for_each_bernoulli(choose2(g.size()), p.p_edge_within(), rng, [&](std::uint64_t r) {
      const auto [a, b] = unrank_pair(r);
      edges.push_back({g[a], g[b]});
    });
  for_each_bernoulli(choose2(p.n), p.p_edge_across(), rng, [&](std::uint64_t r) {
    const auto [a, b] = unrank_pair(r);
    if (c[a] != c[b]) edges.push_back({a, b});
  });
  return edges;
}

std::vector<VertexTriple> sample_block_triples(const BlockParams& p, const CommunityAssignment& c,
                                               std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<VertexTriple> triples;
  const auto groups = c.members();
  for (const auto& g : groups)
    for_each_bernoulli(choose3(g.size()), p.p_triangle_within(), rng, [&](std::uint64_t r) {
      const auto [a, b, d] = unrank_triple(r);
      triples.push_back({g[a], g[b], g[d]});
    });
  for_each_bernoulli(choose3(p.n), p.p_triangle_across(), rng, [&](std::uint64_t r) {
    const auto t = unrank_triple(r);
    if (!(c[t[0]] == c[t[1]] && c[t[1]] == c[t[2]])) triples.push_back(t);
  });
  return triples;
}

double checked_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw InvalidParams(std::string("gen_inhomogeneous: ") + what + " probability " +
                        std::to_string(v) + " outside [0,1]");
  return v;
}

}  // namespace

ProbabilityProvider constant_provider(double p_edge, double p_triangle) {
  return {[p_edge](Vertex, Vertex) { return p_edge; },
          [p_triangle](Vertex, Vertex, Vertex) { return p_triangle; }};
}

ProbabilityProvider block_provider(const BlockParams& p, const CommunityAssignment& c) {
  check_assignment(p, c);
  return {[p, c](Vertex i, Vertex j) {
            return c[i] == c[j] ? p.p_edge_within() : p.p_edge_across();
          },
          [p, c](Vertex i, Vertex j, Vertex k) {
            return c[i] == c[j] && c[j] == c[k] ? p.p_triangle_within() : p.p_triangle_across();
          }};
}

CommunityAssignment gen_balanced_assignment(std::size_t n, std::size_t k) {
  if (k == 0 || n == 0 || n % k != 0)
    throw InvalidParams("gen_balanced_assignment: n=" + std::to_string(n) +
                        " is not divisible by k=" + std::to_string(k));
  const std::size_t block = n / k;
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = int(i / block);
  return CommunityAssignment(std::move(labels), int(k));
}

SuperimposedGraph gen_sbm(const BlockParams& p, const CommunityAssignment& c, std::uint64_t seed) {
  check_assignment(p, c);
  return SuperimposedGraph(p.n, sample_block_pairs(p, c, derive_seed(seed, kDyadicTag)), {});
}

SuperimposedGraph gen_hypergraph_3uniform(const BlockParams& p, const CommunityAssignment& c,
                                          std::uint64_t seed) {
  check_assignment(p, c);
  return SuperimposedGraph(p.n, {}, sample_block_triples(p, c, derive_seed(seed, kTriadicTag)));
}

SuperimposedGraph gen_supsbm(const BlockParams& p, const CommunityAssignment& c, std::uint64_t seed) {
  check_assignment(p, c);
  return SuperimposedGraph(p.n, sample_block_pairs(p, c, derive_seed(seed, kDyadicTag)),
                           sample_block_triples(p, c, derive_seed(seed, kTriadicTag)));
}

SuperimposedGraph gen_nonuniform_hypergraph_sbm(const BlockParams& p, const CommunityAssignment& c,
                                                std::uint64_t seed) {
  return gen_supsbm(p, c, seed);
}

SuperimposedGraph gen_inhomogeneous(std::size_t n, const ProbabilityProvider& pp, std::uint64_t seed) {
  if (n == 0) throw InvalidParams("gen_inhomogeneous: n must be positive");
  RandomStream dyadic(derive_seed(seed, kDyadicTag));
  RandomStream triadic(derive_seed(seed, kTriadicTag));
  std::vector<VertexPair> edges;
  std::vector<VertexTriple> triples;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (dyadic.bernoulli(checked_probability(pp.edge_prob(i, j), "edge"))) edges.push_back({i, j});
  for (Vertex k = 2; k < n; ++k)
    for (Vertex j = 1; j < k; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (triadic.bernoulli(checked_probability(pp.triangle_prob(i, j, k), "triangle")))
          triples.push_back({i, j, k});
  return SuperimposedGraph(n, std::move(edges), std::move(triples));
}

GrowthWindowReport check_growth_window(std::size_t n, const GrowthWindow& w) {
  const double dn = double(n);
  const double logn = std::log(dn);
  const double cap = std::pow(dn, 0.4 - w.epsilon);
  GrowthWindowReport r;
  r.p_e_max = w.p_e_max;
  r.p_t_max = w.p_t_max;
  r.edge_lower = logn / dn <= w.p_e_max;
  r.edge_upper = w.p_e_max < cap / dn;
  r.triangle_lower = std::pow(logn, 8.0) / (dn * dn) < w.p_t_max;
  r.triangle_upper = w.p_t_max < cap / (dn * dn);
  r.coupling = w.p_t_max > w.p_e_max * logn / dn;
  return r;
}

GrowthWindowReport check_growth_window(const BlockParams& p, double epsilon) {
  const double dn = double(p.n);
  return check_growth_window(
      p.n, GrowthWindow{std::max(p.a_e, p.b_e) / dn, std::max(p.a_t, p.b_t) / dn, epsilon});
}

}  // namespace motifspectra
