#pragma once

// Tabular experiment output, written as RFC 4180 CSV or as a JSON array of
// row objects with the same columns.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace motifspectra::experiments {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// Shortest round-trip text for a double; NaN and infinities become "nan",
/// "inf", "-inf".
std::string format_double(double v);

class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  /// Throws InvalidInput when the row width differs from the column count.
  void add_row(std::vector<Cell> row);

  /// Value of `column` in row `r`; throws std::out_of_range for unknown names.
  const Cell& at(std::size_t r, const std::string& column) const;
  double number(std::size_t r, const std::string& column) const;

  void write_csv(std::ostream& out) const;
  nlohmann::ordered_json to_json() const;
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);

/// Writes to `path` in the chosen format; throws std::runtime_error on I/O failure.
void write_table(const ResultTable& table, const std::string& path, OutputFormat format);

}  // namespace motifspectra::experiments
