#include "motifspectra/motif.hpp"

#include <algorithm>
#include <string>

#include "motifspectra/errors.hpp"

namespace motifspectra {

namespace {

using Neighbors = std::vector<std::vector<Vertex>>;

// Visits every k > j in both sorted lists.
template <class F>
void for_each_common_above(const std::vector<Vertex>& a, const std::vector<Vertex>& b, Vertex j,
                           F&& f) {
  auto ia = std::upper_bound(a.begin(), a.end(), j);
  auto ib = std::upper_bound(b.begin(), b.end(), j);
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      f(*ia);
      ++ia;
      ++ib;
    }
  }
}

std::size_t count_common(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

Neighbors simple_neighbors(const SuperimposedGraph& g) {
  Neighbors nb(g.num_vertices());
  auto link = [&](Vertex a, Vertex b) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  };
  for (const auto& e : g.dyadic_edges()) link(e[0], e[1]);
  for (const auto& t : g.hyperedges()) {
    link(t[0], t[1]);
    link(t[1], t[2]);
    link(t[0], t[2]);
  }
  for (auto& list : nb) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return nb;
}

void add_triple(SymmetricMatrix& m, Vertex i, Vertex j, Vertex k) {
  m.add(i, j, 1.0);
  m.add(j, k, 1.0);
  m.add(i, k, 1.0);
}

void check_balanced(const BlockParams& p, const CommunityAssignment& c) {
  p.validate();
  if (c.size() != p.n || std::size_t(c.k()) != p.k || !c.balanced())
    throw InvalidParams("expected matrix: assignment must be balanced with the params' n and k");
}

SymmetricMatrix block_matrix(const CommunityAssignment& c, BlockValues v, Diagonal diag) {
  const auto n = c.size();
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (diag == Diagonal::block_form) m.set(i, i, v.within);
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, c[i] == c[j] ? v.within : v.across);
  }
  return m;
}

}  // namespace

TripleIndicators classify_triple(const SuperimposedGraph& g, Vertex i, Vertex j, Vertex k) {
  TripleIndicators t;
  t.hyperedge = g.has_hyperedge(i, j, k);
  const std::array<std::pair<Vertex, Vertex>, 3> sides{{{i, j}, {j, k}, {i, k}}};
  std::array<bool, 3> dyadic{};
  std::array<bool, 3> covered{};
  for (std::size_t s = 0; s < 3; ++s) {
    dyadic[s] = g.has_dyadic_edge(sides[s].first, sides[s].second);
    covered[s] = g.triangle_cover_count(sides[s].first, sides[s].second) > 0;
  }
  t.edges3 = dyadic[0] && dyadic[1] && dyadic[2];
  if (t.hyperedge) return t;

  // With no hyperedge on the triple, any covering hyperedge is another one.
  t.triangles3 = covered[0] && covered[1] && covered[2] && !t.edges3;
  auto hyper_only = [&](std::size_t s) { return covered[s] && !dyadic[s]; };
  auto dyadic_only = [&](std::size_t s) { return dyadic[s] && !covered[s]; };
  for (std::size_t s = 0; s < 3; ++s) {
    const std::size_t u = (s + 1) % 3;
    const std::size_t v = (s + 2) % 3;
    t.triangles2edge = t.triangles2edge || (dyadic_only(s) && hyper_only(u) && hyper_only(v));
    t.triangle_edges2 = t.triangle_edges2 || (hyper_only(s) && dyadic_only(u) && dyadic_only(v));
  }
  return t;
}

SymmetricMatrix triangle_motif_observed(const SymmetricMatrix& adj) {
  const auto n = adj.size();
  Neighbors nb(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (adj(i, i) != 0.0) throw InvalidInput("triangle_motif_observed: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = adj(i, j);
      if (v == 1.0) {
        nb[i].push_back(Vertex(j));
      } else if (v != 0.0) {
        throw InvalidInput("triangle_motif_observed: adjacency entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") is not 0 or 1");
      }
    }
  }
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex j : nb[i])
      if (j > i)
        if (auto common = count_common(nb[i], nb[j])) out.set(i, j, double(common));
  return out;
}

TriangleDecomposition decompose_triangles(const SuperimposedGraph& g) {
  const auto n = g.num_vertices();
  TriangleDecomposition d{SymmetricMatrix(n), SymmetricMatrix(n), SymmetricMatrix(n),
                          SymmetricMatrix(n), SymmetricMatrix(n)};
  const auto nb = simple_neighbors(g);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : nb[i]) {
      if (j <= i) continue;
      for_each_common_above(nb[i], nb[j], j, [&](Vertex k) {
        const auto t = classify_triple(g, i, j, k);
        if (t.hyperedge) add_triple(d.a_t2, i, j, k);
        if (t.edges3) add_triple(d.a_e3, i, j, k);
        if (t.triangles3) add_triple(d.a_t3, i, j, k);
        if (t.triangles2edge) add_triple(d.a_t2e, i, j, k);
        if (t.triangle_edges2) add_triple(d.a_te2, i, j, k);
      });
    }
  }
  return d;
}

SymmetricMatrix dyadic_adjacency(const SuperimposedGraph& g) {
  SymmetricMatrix m(g.num_vertices());
  for (const auto& e : g.dyadic_edges()) m.set(e[0], e[1], 1.0);
  return m;
}

SymmetricMatrix hyperedge_motif_matrix(const SuperimposedGraph& g) {
  SymmetricMatrix m(g.num_vertices());
  for (const auto& t : g.hyperedges()) add_triple(m, t[0], t[1], t[2]);
  return m;
}

SymmetricMatrix triangle_motif_generative(const TriangleDecomposition& d) {
  return d.a_t2 + d.a_e3 + d.a_t3 + d.a_t2e + d.a_te2;
}

BlockValues expected_ae2_values(const BlockParams& p) {
  return {p.p_edge_within(), p.p_edge_across()};
}

BlockValues expected_at2_values(const BlockParams& p) {
  const double n = double(p.n);
  const double k = double(p.k);
  const double s = n / k;
  return {(s - 2.0) * p.a_t / n + (k - 1.0) * s * p.b_t / n, (n - 2.0) * p.b_t / n};
}

BlockValues expected_ae3_values(const BlockParams& p) {
  const double n = double(p.n);
  const double k = double(p.k);
  const double s = n / k;
  const double a = p.a_e;
  const double b = p.b_e;
  const double n2 = n * n;
  return {(a / n) * ((s - 2.0) * a * a / n2 + (k - 1.0) * s * b * b / n2),
          (b / n) * (2.0 * (s - 1.0) * a * b / n2 + (k - 2.0) * s * b * b / n2)};
}

SymmetricMatrix expected_AE2(const BlockParams& p, const CommunityAssignment& c, Diagonal diag) {
  check_balanced(p, c);
  return block_matrix(c, expected_ae2_values(p), diag);
}

SymmetricMatrix expected_AT2(const BlockParams& p, const CommunityAssignment& c, Diagonal diag) {
  check_balanced(p, c);
  return block_matrix(c, expected_at2_values(p), diag);
}

SymmetricMatrix expected_AE3(const BlockParams& p, const CommunityAssignment& c, Diagonal diag) {
  check_balanced(p, c);
  return block_matrix(c, expected_ae3_values(p), diag);
}

LambdaMin lambda_min_AT2(const BlockParams& p) {
  const double s = double(p.n) / double(p.k);
  if (p.a_t == p.b_t || s <= 2.0) return {0.0, true};
  return {(s - 2.0) * (p.a_t - p.b_t) / double(p.k), false};
}

LambdaMin lambda_min_AE3(const BlockParams& p) {
  if (p.a_e == p.b_e) return {0.0, true};
  const double n = double(p.n);
  const double k = double(p.k);
  const double a = p.a_e;
  const double b = p.b_e;
  return {(k * b * b + a * a + a * b - 2.0 * b * b) * (a - b) / (k * k * n) -
              2.0 * a * (a + b) * (a - b) / (k * n * n),
          false};
}

}  // namespace motifspectra
