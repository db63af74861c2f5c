#pragma once

// Triangle motif matrices. Observed counting works on any 0/1 adjacency;
// the generative decomposition splits triangle counts of a superimposed graph
// by how each triangle arose; the expected-matrix functions give closed forms
// under the balanced block model.

#include "motifspectra/graph_model.hpp"

namespace motifspectra {

/// Per-triple generative indicators for an unordered triple {i,j,k}.
///   hyperedge      T      the triple is itself a hyperedge
///   edges3         E^3    all three sides are dyadic edges
///   triangles3     T^3    no hyperedge on the triple, every side covered by
///                         some hyperedge, and not already an E^3 triangle
///   triangles2edge T^2E   two sides hyperedge-covered without a dyadic edge,
///                         the third side dyadic and not covered
///   triangle_edges2 TE^2  one side hyperedge-covered without a dyadic edge,
///                         the other two dyadic and not covered
/// T^3, T^2E and TE^2 all require the triple not to be a hyperedge.
struct TripleIndicators {
  bool hyperedge = false;
  bool edges3 = false;
  bool triangles3 = false;
  bool triangles2edge = false;
  bool triangle_edges2 = false;

  int sum() const {
    return int(hyperedge) + int(edges3) + int(triangles3) + int(triangles2edge) +
           int(triangle_edges2);
  }
};

TripleIndicators classify_triple(const SuperimposedGraph& g, Vertex i, Vertex j, Vertex k);

struct TriangleDecomposition {
  SymmetricMatrix a_t2;   ///< hyperedge triangles, (i,j) -> sum_k T_ijk
  SymmetricMatrix a_e3;   ///< triangles of three dyadic edges
  SymmetricMatrix a_t3;   ///< triangles closed by three distinct hyperedges
  SymmetricMatrix a_t2e;  ///< two hyperedge sides plus one dyadic side
  SymmetricMatrix a_te2;  ///< one hyperedge side plus two dyadic sides
};

/// (i,j) -> number of k with adj(i,k) = adj(j,k) = adj(i,j) = 1, via sorted
/// neighbor-list intersection. Throws InvalidInput unless adj is 0/1 with a
/// zero diagonal.
SymmetricMatrix triangle_motif_observed(const SymmetricMatrix& adj);

/// Every triple with a nonzero indicator is a triangle of the observed simple
/// graph, so only those triangles are enumerated.
TriangleDecomposition decompose_triangles(const SuperimposedGraph& g);

/// A_{E^2}: 0/1 matrix of the dyadic edges alone.
SymmetricMatrix dyadic_adjacency(const SuperimposedGraph& g);

/// A_{T^2} read straight off the hyperedge list; equals decompose_triangles(g).a_t2.
SymmetricMatrix hyperedge_motif_matrix(const SuperimposedGraph& g);

/// A_T = A_{T^2} + A_{E^3} + A_{T^3} + A_{T^2E} + A_{TE^2}.
SymmetricMatrix triangle_motif_generative(const TriangleDecomposition& d);

/// Diagonal convention for expected matrices. Motif matrices have a zero
/// diagonal; the block form C B C^T repeats the within-block value there,
/// which makes its nonzero spectrum exactly {n/k (g-h) + n h, n/k (g-h)}.
enum class Diagonal { zero, block_form };

/// Within-block value g and cross-block value h of an expected matrix.
struct BlockValues {
  double within = 0.0;
  double across = 0.0;
};

BlockValues expected_ae2_values(const BlockParams& p);
BlockValues expected_at2_values(const BlockParams& p);
BlockValues expected_ae3_values(const BlockParams& p);

/// E[A_{E^2}]; c must be balanced and agree with p.
SymmetricMatrix expected_AE2(const BlockParams& p, const CommunityAssignment& c,
                             Diagonal diag = Diagonal::zero);
/// E[A_{T^2}].
SymmetricMatrix expected_AT2(const BlockParams& p, const CommunityAssignment& c,
                             Diagonal diag = Diagonal::zero);
/// E[A_{E^3}].
SymmetricMatrix expected_AE3(const BlockParams& p, const CommunityAssignment& c,
                             Diagonal diag = Diagonal::zero);

struct LambdaMin {
  double value = 0.0;
  bool degenerate = false;
};

/// (n/k - 2)(a_t - b_t)/k. Degenerate (value 0) when a_t == b_t or n/k <= 2.
LambdaMin lambda_min_AT2(const BlockParams& p);

/// (k b^2 + a^2 + ab - 2b^2)(a - b)/(k^2 n) - 2a(a+b)(a-b)/(k n^2) with
/// a = a_e, b = b_e. Degenerate when a_e == b_e.
LambdaMin lambda_min_AE3(const BlockParams& p);

}  // namespace motifspectra
