#pragma once

// Misclustering rate, spectral norms, and the concentration normalizers used
// to scale ||X - E[X]||_2 in the concentration experiments.

#include <cstddef>
#include <span>
#include <vector>

#include "motifspectra/graph_model.hpp"

namespace motifspectra {

/// Fraction of vertices misassigned under the best relabeling of `est`.
/// Dispatches to enumeration for at most 8 labels, matching otherwise.
double misclustering_rate(const CommunityAssignment& truth, const CommunityAssignment& est);

/// Exhaustive search over label permutations.
double misclustering_rate_enumeration(const CommunityAssignment& truth, const CommunityAssignment& est);

/// Maximum-agreement assignment on the confusion matrix (Hungarian method).
double misclustering_rate_matching(const CommunityAssignment& truth, const CommunityAssignment& est);

/// n * misclustering_rate, as an integer.
std::size_t misclustered_count(const CommunityAssignment& truth, const CommunityAssignment& est);

/// Minimum-cost perfect assignment on a square cost matrix; returns the
/// column chosen for each row.
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost);

/// Largest singular value (max |eigenvalue|). tol is the relative accuracy
/// demanded of the dense eigenvalue solve.
double spectral_norm(const SymmetricMatrix& m, double tol = 1e-8);

enum class Exponent { half, one };

/// ||a - ea||_2 / normalizer^{1/2 or 1}. Throws InvalidParams if normalizer <= 0.
double concentration_ratio(const SymmetricMatrix& a, const SymmetricMatrix& ea, double normalizer,
                           Exponent exponent);

/// Theorem-statement normalizers with every constant set to 1 and natural logs.
struct ConcentrationNormalizer {
  double delta = 0.0;      ///< max{n p_e, log n}
  double delta_t = 0.0;    ///< max{n^2 p_t, log n}
  double tau_max = 0.0;    ///< max{n p_e^2, log n}
  double d_e3 = 0.0;       ///< max{n^3 p_e^5, n p_e (log n)^2}
  double delta_t3 = 0.0;   ///< max{n^5 p_t^3, (log n)^4}
  double delta_t2e = 0.0;  ///< max{n^4 p_t^2 p_e, (log n)^4}
  double delta_te2 = 0.0;  ///< max{n^3 p_t p_e^2, (log n)^3}
};

ConcentrationNormalizer normalizers(std::size_t n, double p_e_max, double p_t_max);

}  // namespace motifspectra
