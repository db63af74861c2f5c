#include "motifspectra/experiments/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "motifspectra/errors.hpp"

namespace motifspectra::experiments {

namespace {

// JSON built in code stores small literals as signed integers, parsed text
// as unsigned; both are accepted.
bool non_negative_integer(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

}  // namespace

double Intensity::at(std::size_t n) const {
  const double dn = double(n);
  return coef * std::pow(std::log(dn), log_power) * std::pow(dn, n_power);
}

Intensity parse_intensity(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0, 0.0};
  if (!j.is_object() || !j.contains("coef"))
    throw InvalidParams("'" + field + "' must be a number or {coef, log_power, n_power}");
  Intensity r;
  r.coef = param_number(j, "coef");
  r.log_power = param_number(j, "log_power", 0.0);
  r.n_power = param_number(j, "n_power", 0.0);
  return r;
}

ScenarioConfig parse_config(const Json& j) {
  if (!j.is_object()) throw InvalidParams("config must be a JSON object");
  ScenarioConfig c;
  c.scenario = param_string(j, "scenario", "");
  if (std::find(std::begin(kScenarioNames), std::end(kScenarioNames), c.scenario) ==
      std::end(kScenarioNames))
    throw InvalidParams("unknown scenario '" + c.scenario + "'");
  c.trials = param_count(j, "trials", 1);
  if (c.trials < 1) throw InvalidParams("trials must be at least 1");
  if (j.contains("master_seed")) {
    const auto& s = j.at("master_seed");
    if (!non_negative_integer(s))
      throw InvalidParams("master_seed must be a non-negative integer");
    c.master_seed = s.get<std::uint64_t>();
  }
  c.output_path = param_string(j, "output_path", "");
  c.format = parse_format(param_string(j, "format", "csv"));
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw InvalidParams("params must be an object");
    c.params = j.at("params");
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = std::size_t(std::count(text.begin(), text.begin() + std::ptrdiff_t(upto), '\n')) + 1;
    throw ParseError(path + ": " + e.what(), line);
  }
  auto c = parse_config(j);
  c.base_dir = std::filesystem::path(path).parent_path().string();
  return c;
}

std::string resolve_path(const ScenarioConfig& c, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || c.base_dir.empty()) return path;
  return (std::filesystem::path(c.base_dir) / p).string();
}

namespace {

const Json& require(const Json& params, const std::string& field) {
  if (!params.is_object() || !params.contains(field))
    throw InvalidParams("missing parameter '" + field + "'");
  return params.at(field);
}

double as_number(const Json& v, const std::string& field) {
  if (!v.is_number()) throw InvalidParams("'" + field + "' must be a number");
  return v.get<double>();
}

std::size_t as_count(const Json& v, const std::string& field) {
  if (!non_negative_integer(v)) throw InvalidParams("'" + field + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

double param_number(const Json& params, const std::string& field) {
  return as_number(require(params, field), field);
}

double param_number(const Json& params, const std::string& field, double fallback) {
  return params.contains(field) ? param_number(params, field) : fallback;
}

std::size_t param_count(const Json& params, const std::string& field) {
  return as_count(require(params, field), field);
}

std::size_t param_count(const Json& params, const std::string& field, std::size_t fallback) {
  return params.contains(field) ? param_count(params, field) : fallback;
}

bool param_bool(const Json& params, const std::string& field, bool fallback) {
  if (!params.contains(field)) return fallback;
  const auto& v = params.at(field);
  if (!v.is_boolean()) throw InvalidParams("'" + field + "' must be true or false");
  return v.get<bool>();
}

std::string param_string(const Json& params, const std::string& field, const std::string& fallback) {
  if (!params.contains(field)) return fallback;
  const auto& v = params.at(field);
  if (!v.is_string()) throw InvalidParams("'" + field + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> param_grid(const Json& params, const std::string& field) {
  const auto& v = require(params, field);
  if (!v.is_array() || v.empty()) throw InvalidParams("'" + field + "' must be a non-empty array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(as_number(x, field));
  return out;
}

std::vector<std::size_t> param_count_grid(const Json& params, const std::string& field) {
  const auto& v = require(params, field);
  if (!v.is_array() || v.empty()) throw InvalidParams("'" + field + "' must be a non-empty array");
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(as_count(x, field));
  return out;
}

}  // namespace motifspectra::experiments
