#pragma once

// Scenario configuration files. A config is a JSON object:
//
//   {
//     "scenario": "misclustering_vs_gap",
//     "trials": 30,
//     "master_seed": 7,
//     "output_path": "out/gap.csv",
//     "format": "csv",
//     "params": { ... scenario specific ... }
//   }
//
// Rates inside "params" may be plain numbers or growth expressions
// {"coef": c, "log_power": x, "n_power": y}, read as c (log n)^x n^y.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "motifspectra/experiments/table.hpp"

namespace motifspectra::experiments {

using Json = nlohmann::json;

inline constexpr std::string_view kScenarioNames[] = {
    "table1",          "concentration_scaling", "misclustering_vs_gap",
    "tradeoff_crossover", "weighted_sweep",     "sbm_triangle_density"};

struct Intensity {
  double coef = 0.0;
  double log_power = 0.0;
  double n_power = 0.0;

  double at(std::size_t n) const;
};

/// Number or {coef, log_power, n_power}; throws InvalidParams otherwise.
Intensity parse_intensity(const Json& j, const std::string& field);

struct ScenarioConfig {
  std::string scenario;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  Json params = Json::object();
  /// Directory that relative paths inside params resolve against; load_config
  /// sets it to the config file's directory.
  std::string base_dir;
};

/// `path` if absolute or base_dir is empty, otherwise base_dir/path.
std::string resolve_path(const ScenarioConfig& c, const std::string& path);

/// Validates the scenario name, trials >= 1 and the format. Scenario-specific
/// params are checked by the runner. Throws InvalidParams.
ScenarioConfig parse_config(const Json& j);

/// Reads and parses a config file; JSON syntax errors become ParseError.
ScenarioConfig load_config(const std::string& path);

// Typed accessors for params with field names in the error messages.
double param_number(const Json& params, const std::string& field);
double param_number(const Json& params, const std::string& field, double fallback);
std::size_t param_count(const Json& params, const std::string& field);
std::size_t param_count(const Json& params, const std::string& field, std::size_t fallback);
bool param_bool(const Json& params, const std::string& field, bool fallback);
std::string param_string(const Json& params, const std::string& field, const std::string& fallback);
/// Non-empty array of numbers.
std::vector<double> param_grid(const Json& params, const std::string& field);
/// Non-empty array of counts.
std::vector<std::size_t> param_count_grid(const Json& params, const std::string& field);

}  // namespace motifspectra::experiments
