#include "motifspectra/experiments/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "motifspectra/errors.hpp"

namespace motifspectra::experiments {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      c);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw InvalidInput("ResultTable: row has " + std::to_string(row.size()) + " cells, expected " +
                       std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

const Cell& ResultTable::at(std::size_t r, const std::string& column) const {
  const auto it = std::find(columns_.begin(), columns_.end(), column);
  if (it == columns_.end()) throw std::out_of_range("ResultTable: no column '" + column + "'");
  return rows_.at(r)[std::size_t(it - columns_.begin())];
}

double ResultTable::number(std::size_t r, const std::string& column) const {
  const auto& c = at(r, column);
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return double(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? 1.0 : 0.0;
  throw std::invalid_argument("ResultTable: column '" + column + "' is not numeric");
}

void ResultTable::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "," : "") << csv_quote(columns_[c]);
  out << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_quote(cell_text(row[c]));
    out << "\r\n";
  }
}

nlohmann::ordered_json ResultTable::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                obj[columns_[c]] = v;
              } else {
                obj[columns_[c]] = nullptr;
              }
            } else {
              obj[columns_[c]] = v;
            }
          },
          row[c]);
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

void ResultTable::write_json(std::ostream& out) const { out << to_json().dump(2) << '\n'; }

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw InvalidParams("unknown output format '" + name + "' (expected csv or json)");
}

void write_table(const ResultTable& table, const std::string& path, OutputFormat format) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (format == OutputFormat::csv) {
    table.write_csv(out);
  } else {
    table.write_json(out);
  }
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace motifspectra::experiments
