#include "bergman/cli/app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bergman/bloch.hpp"
#include "bergman/classify.hpp"
#include "bergman/cli/checks.hpp"
#include "bergman/cli/config.hpp"
#include "bergman/cli/table.hpp"
#include "bergman/errors.hpp"
#include "bergman/extremal.hpp"
#include "bergman/projection.hpp"

namespace bergman::cli {
namespace {

struct CommonFlags {
  std::string config_path;
  std::string format;
  std::string out;
  std::optional<std::size_t> order;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "flat key=value configuration file");
  cmd->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", flags.out, "output file (default: stdout)");
}

RunConfig resolve(const CommonFlags& flags) {
  RunConfig cfg;
  if (!flags.config_path.empty()) apply_config_file(cfg, flags.config_path);
  if (flags.format == "json") cfg.format = Format::json;
  if (flags.format == "csv") cfg.format = Format::csv;
  if (!flags.out.empty()) cfg.out = flags.out;
  if (flags.order) cfg.series_order = *flags.order;
  cfg.validate();
  return cfg;
}

Table make_table(const std::string& command, const RunConfig& cfg, const std::string& witness) {
  Table t;
  t.meta.emplace_back("command", command);
  t.meta.emplace_back("config_hash", cfg.hash());
  t.meta.emplace_back("witness", witness);
  return t;
}

void emit(const Table& t, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    write_table(t, cfg.format, out);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw DomainError("cannot open output file " + cfg.out);
  write_table(t, cfg.format, file);
}

std::string num(double v) { return format_double(v); }

int cmd_project(double beta, const RunConfig& cfg, std::ostream& out) {
  const auto s = projection::project(beta, cfg.series_order, cfg.inner_cap);
  Table t = make_table("project", cfg, "Taylor coefficients of the Bergman projection of phi_beta");
  t.meta.emplace_back("beta", num(beta));
  t.meta.emplace_back("order", std::to_string(cfg.series_order));
  t.columns = {"n", "c_n"};
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) t.add_row({static_cast<long long>(n), s.coeffs[n].real()});
  t.footer.emplace_back("tail_bound", num(s.tail_bound));
  emit(t, cfg, out);
  return kSuccess;
}

int cmd_norm(double beta, const std::vector<std::size_t>& gn, const RunConfig& cfg, std::ostream& out) {
  if (!gn.empty()) {
    Table t = make_table("norm", cfg, "A1 norms of g_n = (1/n)(1-z)^(-2+1/n) tending to 1");
    t.columns = {"n", "norm", "closed_form", "error_estimate"};
    for (const auto& row : extremal::g_n_limit_scan(gn)) {
      t.add_row({static_cast<long long>(row.n), row.norm, row.closed_form, row.error_estimate});
    }
    emit(t, cfg, out);
    return kSuccess;
  }
  Table t = make_table("norm", cfg, "A1 norm of (1-z)^beta by three methods");
  t.meta.emplace_back("beta", num(beta));
  t.columns = {"beta", "method", "value", "error_estimate"};
  for (const auto& r : {extremal::power_norm_series(beta), extremal::power_norm_closed_form(beta),
                        extremal::power_norm_quadrature(beta, cfg.quadrature())}) {
    t.add_row({beta, std::string(extremal::to_string(r.method)), r.value, r.error_estimate});
  }
  emit(t, cfg, out);
  return kSuccess;
}

int cmd_distance(double beta, bool profile, const RunConfig& cfg, std::ostream& out) {
  const auto s = projection::project(beta, cfg.series_order, cfg.inner_cap);
  const auto d = bloch::little_bloch_distance(s, beta);
  if (profile) {
    Table t = make_table("distance", cfg, "radial profile (1-x^2)|(P phi_beta)'(x)| toward x = 1");
    t.meta.emplace_back("beta", num(beta));
    t.columns = {"x", "value"};
    for (const auto& pt : d.profile) t.add_row({pt.x, pt.value});
    emit(t, cfg, out);
    return kSuccess;
  }
  const auto norm = bloch::bloch_norm(s, cfg.bloch_grid());
  Table t = make_table("distance", cfg, "Bloch distance of P phi_beta to the little Bloch space");
  t.columns = {"beta", "estimate", "expected", "relative_error", "fit_error", "profile_levels", "bloch_norm",
               "numeric_lower_bound"};
  const double relative = d.expected > 0.0 ? std::abs(d.estimate - d.expected) / d.expected : d.estimate;
  Cell lower = std::string();
  if (beta >= 0.0) lower = classify::numeric_lower_bound(beta, s).value;
  t.add_row({beta, d.estimate, d.expected, relative, d.fit_error, static_cast<long long>(d.profile.size()),
             norm.norm, lower});
  emit(t, cfg, out);
  return kSuccess;
}

int cmd_scan(double lo, double hi, double step, const RunConfig& cfg, std::ostream& out) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) throw DomainError("empty beta range");
  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  Table t = make_table("scan", cfg, "distance bounds and strong-exposedness verdicts for phi_beta");
  t.columns = {"beta", "lower", "upper", "conjectured", "verdict", "lower_source", "upper_source"};
  for (long long k = 0; k < count; ++k) {
    const double beta = std::round((lo + static_cast<double>(k) * step) * 1e12) / 1e12;
    const auto b = classify::bounds_single(beta);
    Cell conj = std::string();
    if (b.conjectured) conj = *b.conjectured;
    t.add_row({beta, b.lower, b.upper, conj, std::string(classify::to_string(b.verdict)), b.lower_source,
               b.upper_source});
  }
  emit(t, cfg, out);
  return kSuccess;
}

int cmd_counterexample(const std::vector<double>& betas, const RunConfig& cfg, std::ostream& out) {
  const extremal::Logniet f(cfg.quadrature());
  const auto rows = extremal::logniet_experiment(betas, f);
  Table t = make_table("counterexample", cfg, "log-modified f: L(f_beta) near 1 while f_beta stays far from f");
  t.meta.emplace_back("normalizing_constant", num(f.constant()));
  t.meta.emplace_back("witness_radius", num(extremal::kWitnessRadius));
  t.columns = {"beta", "L_real", "L_imag", "distance", "distance_error", "outer_distance", "outer_mass"};
  for (const auto& r : rows) {
    t.add_row({r.beta, r.functional.real(), r.functional.imag(), r.distance, r.distance_error, r.outer_distance,
               r.outer_mass});
  }
  emit(t, cfg, out);
  return kSuccess;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
  const auto criteria = suite_criteria(suite);
  if (!criteria) throw DomainError("unknown suite '" + suite + "'");
  Table t = make_table("verify", cfg, "acceptance checks, suite " + suite);
  // Timings vary run to run and are kept out of the table.
  t.columns = {"criterion", "name", "citation", "computed", "expected", "tolerance", "status", "detail"};
  bool all = true;
  for (int c : *criteria) {
    const auto r = run_check(c, cfg);
    all = all && r.passed;
    t.add_row({static_cast<long long>(r.criterion), r.name, r.citation, r.computed, r.expected, r.tolerance,
               std::string(r.passed ? "PASS" : "FAIL"), r.detail});
  }
  t.footer.emplace_back("result", all ? "PASS" : "FAIL");
  emit(t, cfg, out);
  return all ? kSuccess : kNumericalFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman projections, Bloch distances and exposing functionals of power symbols", "bergman"};
  app.require_subcommand(1);

  CommonFlags flags;
  double beta = 0.0;
  std::optional<std::size_t> order;
  std::vector<std::size_t> gn;
  bool profile = false;
  double beta_min = 0.0;
  double beta_max = 0.0;
  double step = 0.0;
  std::string betas_text = "-1.5,-1.6,-1.7,-1.8,-1.9,-1.95";
  std::string suite;

  auto* project = app.add_subcommand("project", "Taylor coefficients of P phi_beta");
  project->add_option("--beta", beta, "exponent beta > -2")->required();
  project->add_option("--order", order, "series order N");
  add_common(project, flags);

  auto* norm = app.add_subcommand("norm", "A1 norm of (1-z)^beta, or of g_n with --gn");
  norm->add_option("--beta", beta, "exponent beta > -2");
  norm->add_option("--gn", gn, "list of n for the g_n scan")->delimiter(',');
  add_common(norm, flags);

  auto* distance = app.add_subcommand("distance", "Bloch distance of P phi_beta to the little Bloch space");
  distance->add_option("--beta", beta, "exponent beta > -2")->required();
  distance->add_option("--order", order, "series order N");
  distance->add_flag("--profile", profile, "write the radial profile instead of the summary");
  add_common(distance, flags);

  auto* scan = app.add_subcommand("scan", "distance bounds and verdicts over a beta grid");
  scan->add_option("--beta-min", beta_min, "first beta")->required();
  scan->add_option("--beta-max", beta_max, "last beta")->required();
  scan->add_option("--step", step, "grid spacing")->required();
  add_common(scan, flags);

  auto* counter = app.add_subcommand("counterexample", "L(f_beta) and ||f_beta - f|| for the log-modified f");
  counter->add_option("--betas", betas_text, "comma-separated descending beta grid in (-2, -1.5]");
  add_common(counter, flags);

  auto* verify = app.add_subcommand("verify", "run acceptance checks");
  verify->add_option("suite", suite, "quadrature, projection, bloch, extremal, classify or all")->required();
  verify->add_option("--order", order, "series order N");
  add_common(verify, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    flags.order = order;
    const RunConfig cfg = resolve(flags);
    if (project->parsed()) return cmd_project(beta, cfg, out);
    if (norm->parsed()) return cmd_norm(norm->count("--beta") ? beta : -1.0, gn, cfg, out);
    if (distance->parsed()) return cmd_distance(beta, profile, cfg, out);
    if (scan->parsed()) return cmd_scan(beta_min, beta_max, step, cfg, out);
    if (counter->parsed()) return cmd_counterexample(parse_double_list(betas_text), cfg, out);
    if (verify->parsed()) return cmd_verify(suite, cfg, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsageError;
}

}  // namespace bergman::cli
