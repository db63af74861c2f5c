#pragma once

// Scenario runners. Each takes a parsed config and returns one result table
// whose rows are aggregated over trials. Trial t of every grid point uses the
// seed trial_seed(master_seed, scenario, t), so a row can be reproduced by
// rerunning the config restricted to that grid point.
//
// Params shared by the synthetic scenarios: "n", "k" (default 2), rates
// "a_e", "b_e", "a_t", "b_t" (numbers or growth expressions, default 0),
// "restarts" (k-means restarts, default 10), "row_normalize" (default false).

#include <cstdint>
#include <string_view>
#include <vector>

#include "motifspectra/experiments/config.hpp"
#include "motifspectra/experiments/table.hpp"
#include "motifspectra/graph_model.hpp"

namespace motifspectra::experiments {

std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view scenario, std::size_t trial);

/// Dispatches on config.scenario.
ResultTable run_scenario(const ScenarioConfig& config);

/// params: "datasets": [{"name", "edges", "labels", "symmetrize",
/// "largest_component"}], "methods" (default: the six standard variants),
/// "restarts" (default 20), "row_normalize" (default true).
/// Columns: dataset, method, n, k, restarts, trials, master_seed,
/// min_misclustered, median_misclustered, best_trial, best_seed.
ResultTable run_table1(const ScenarioConfig& config);

/// params: "n" (grid), "components" (subset of E2, T2, E3, T3, T2E, TE2, T;
/// default all but E2), "mc_batch" (default 200), "epsilon" (default 0.1).
/// E[X] is closed form for E2, T2 and E3 and a Monte Carlo mean otherwise.
ResultTable run_concentration_scaling(const ScenarioConfig& config);

/// params: "gaps" (grid of a_t - b_t), "models" (subset of supsbm,
/// hypergraph), "threshold" (default 0.05).
ResultTable run_misclustering_vs_gap(const ScenarioConfig& config);

/// params: "deltas" (grid), "m", "a_e", "b_e", "weight" (default 1).
/// Triangle rates are planted to realize each (delta, m).
ResultTable run_tradeoff_crossover(const ScenarioConfig& config);

/// params: "weights" (grid), "model" (nonuniform: A_E2 + w A_T2,
/// sbm: A_E2 + w A_E3).
ResultTable run_weighted_sweep(const ScenarioConfig& config);

/// params: "a_e" (array of rates), "b_e_fraction" (b_e = fraction * a_e).
ResultTable run_sbm_triangle_density(const ScenarioConfig& config);

/// Block parameters whose expected edge and triangle degrees realize
/// n E[edge degree] / E[triangle degree] = delta and
/// a_e - b_e = delta (a_t - b_t) / m, solving for the triangle rates.
/// Throws InvalidParams when the solution leaves [0, n].
BlockParams plant_from_edges(std::size_t n, std::size_t k, double a_e, double b_e, double delta, double m);

/// The same relations, solving for the edge rates.
BlockParams plant_from_triangles(std::size_t n, std::size_t k, double a_t, double b_t, double delta,
                                 double m);

/// Kendall tau-b between x and y; 0 when either side is constant.
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

double median(std::vector<double> v);

/// First upward zero crossing of diff along the grid, interpolated linearly
/// in log(x). NaN when diff never goes from <= 0 to > 0.
double crossover_point(const std::vector<double>& x, const std::vector<double>& diff);

}  // namespace motifspectra::experiments
