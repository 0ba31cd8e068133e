// Tabular output shared by every CLI command.
//
// CSV: one header line, then rows; exact integers in full decimal, floats
// with 15 significant digits. JSON: an array of objects keyed by column
// name, exact integers as strings.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "npcount/precision.hpp"

namespace npcount {

inline constexpr int kFloatDigits = 15;

struct Cell {
  enum class Kind { Integer, Float, Text };

  Kind kind = Kind::Text;
  std::string text;

  static Cell integer(const mpz_class& value) { return {Kind::Integer, value.get_str()}; }
  static Cell integer(std::uint64_t value) { return {Kind::Integer, std::to_string(value)}; }
  static Cell floating(const Real& value) { return {Kind::Float, value.to_string(kFloatDigits)}; }
  static Cell label(std::string value) { return {Kind::Text, std::move(value)}; }
};

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

enum class OutputFormat { Csv, Json };

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, OutputFormat format, std::ostream& out);

}  // namespace npcount
