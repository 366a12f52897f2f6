#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/bloch.hpp"
#include "bergman/discquad.hpp"

namespace bergman::cli {

enum class Format { csv, json };

struct RunConfig {
  std::size_t series_order = 2000;
  std::size_t inner_cap = 1'000'000;
  std::size_t radial_order = 96;
  std::size_t angular_order = 384;
  std::size_t panel_order = 16;
  double log_rho_floor = -230.0;
  std::vector<double> epsilon_schedule = discquad::default_epsilon_schedule();
  std::size_t bloch_radii = 64;
  std::size_t bloch_angles = 256;
  std::uint64_t seed = 20240601;
  Format format = Format::csv;
  std::string out;  ///< empty means stdout

  /// Throws DomainError when an order is zero or the schedule is invalid.
  void validate() const;

  discquad::DiscQuadrature quadrature() const;
  bloch::SampleGrid bloch_grid() const;

  /// Canonical text of every numerical setting (the output path and format
  /// are excluded), one key=value per line.
  std::string canonical() const;
  /// 64-bit FNV-1a of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Applies flat `key = value` lines to cfg. Blank lines and lines starting
/// with '#' are ignored. epsilon_schedule takes a comma-separated list.
/// Unknown keys and malformed values throw DomainError naming the line.
void apply_config_text(RunConfig& cfg, const std::string& text);

/// Reads a file and applies it; throws DomainError if it cannot be read.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Parses "a,b,c" into doubles; throws DomainError on junk.
std::vector<double> parse_double_list(const std::string& text);

}  // namespace bergman::cli
