#include "bergman/cli/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace bergman::cli {
namespace {

std::string csv_field(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_field(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_double(v);
      return v;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  for (const auto& [k, v] : t.footer) os << "# " << k << ": " << v << '\n';
}

void write_json(const Table& t, std::ostream& os) {
  auto out = nlohmann::ordered_json::array();
  nlohmann::ordered_json meta;
  meta["record"] = "meta";
  for (const auto& [k, v] : t.meta) meta[k] = v;
  for (const auto& [k, v] : t.footer) meta[k] = v;
  out.push_back(std::move(meta));
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_field(row[i]);
    out.push_back(std::move(obj));
  }
  os << out.dump(1) << '\n';
}

void write_table(const Table& t, Format f, std::ostream& os) {
  if (f == Format::json) {
    write_json(t, os);
  } else {
    write_csv(t, os);
  }
}

}  // namespace bergman::cli
