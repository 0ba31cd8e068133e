#include "npcount/report.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace npcount {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void write_csv(const Table& table, std::ostream& out) {
  const auto& columns = table.columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].text;
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows()) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& cell = row[i];
      if (cell.kind == Cell::Kind::Float) {
        const double value = std::strtod(cell.text.c_str(), nullptr);
        if (std::isfinite(value)) {
          object[table.columns()[i]] = value;
          continue;
        }
      }
      object[table.columns()[i]] = cell.text;
    }
    rows.push_back(std::move(object));
  }
  out << rows.dump(2) << '\n';
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

}  // namespace npcount
