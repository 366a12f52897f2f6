#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bergman/cli/config.hpp"

namespace bergman::cli {

using Cell = std::variant<double, long long, std::string, bool>;

/// A result table. CSV puts `meta` into leading '#' comment lines and
/// `footer` into trailing ones. JSON writes a flat array: one object holding
/// meta and footer entries (marked "record": "meta"), then one object per row.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> footer;

  void add_row(std::vector<Cell> row);
};

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);
void write_table(const Table& t, Format f, std::ostream& os);

}  // namespace bergman::cli
