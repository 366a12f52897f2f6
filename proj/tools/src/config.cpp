#include "bergman/cli/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bergman/errors.hpp"

namespace bergman::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw DomainError("cannot parse '" + t + "' as a number for " + what);
  }
  return v;
}

template <class Int>
Int parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw DomainError("cannot parse '" + t + "' as an integer for " + what);
  }
  return v;
}

}  // namespace

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, "list entry"));
  if (out.empty()) throw DomainError("empty list");
  return out;
}

void RunConfig::validate() const {
  if (series_order < 1) throw DomainError("series_order must be at least 1");
  if (inner_cap < 2) throw DomainError("inner_cap must be at least 2");
  if (bloch_radii == 0 || bloch_angles == 0) throw DomainError("Bloch grid must be non-empty");
  quadrature().validate();
}

discquad::DiscQuadrature RunConfig::quadrature() const {
  discquad::DiscQuadrature q;
  q.radial_order = radial_order;
  q.angular_order = angular_order;
  q.panel_order = panel_order;
  q.log_rho_floor = log_rho_floor;
  q.epsilon_schedule = epsilon_schedule;
  return q;
}

bloch::SampleGrid RunConfig::bloch_grid() const { return {bloch_radii, bloch_angles}; }

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os.precision(17);
  os << "series_order=" << series_order << '\n'
     << "inner_cap=" << inner_cap << '\n'
     << "radial_order=" << radial_order << '\n'
     << "angular_order=" << angular_order << '\n'
     << "panel_order=" << panel_order << '\n'
     << "log_rho_floor=" << log_rho_floor << '\n'
     << "epsilon_schedule=";
  for (std::size_t i = 0; i < epsilon_schedule.size(); ++i) os << (i ? "," : "") << epsilon_schedule[i];
  os << '\n'
     << "bloch_radii=" << bloch_radii << '\n'
     << "bloch_angles=" << bloch_angles << '\n'
     << "seed=" << seed << '\n';
  return os.str();
}

std::string RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    const std::string where = "config key '" + key + "' (line " + std::to_string(lineno) + ")";
    if (key == "series_order") {
      cfg.series_order = parse_int<std::size_t>(value, where);
    } else if (key == "inner_cap") {
      cfg.inner_cap = parse_int<std::size_t>(value, where);
    } else if (key == "radial_order") {
      cfg.radial_order = parse_int<std::size_t>(value, where);
    } else if (key == "angular_order") {
      cfg.angular_order = parse_int<std::size_t>(value, where);
    } else if (key == "panel_order") {
      cfg.panel_order = parse_int<std::size_t>(value, where);
    } else if (key == "log_rho_floor") {
      cfg.log_rho_floor = parse_double(value, where);
    } else if (key == "epsilon_schedule") {
      cfg.epsilon_schedule = parse_double_list(value);
    } else if (key == "bloch_radii") {
      cfg.bloch_radii = parse_int<std::size_t>(value, where);
    } else if (key == "bloch_angles") {
      cfg.bloch_angles = parse_int<std::size_t>(value, where);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(value, where);
    } else if (key == "format") {
      if (value == "csv") {
        cfg.format = Format::csv;
      } else if (value == "json") {
        cfg.format = Format::json;
      } else {
        throw DomainError(where + ": format must be csv or json");
      }
    } else if (key == "out") {
      cfg.out = value;
    } else {
      throw DomainError("unknown " + where);
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str());
}

}  // namespace bergman::cli
