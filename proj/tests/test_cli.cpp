#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/cli/app.hpp"
#include "bergman/cli/checks.hpp"
#include "bergman/cli/config.hpp"
#include "bergman/cli/table.hpp"
#include "bergman/errors.hpp"
#include "json.hpp"

namespace cli = bergman::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Data rows of a CSV table: lines that are neither comments nor the header.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("bergman_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + name);
}

}  // namespace

TEST(CliProject, EvenPower) {
  const auto r = run({"project", "--beta", "2", "--order", "10"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(std::stod(rows[0][1]), 0.5);
  EXPECT_EQ(std::stod(rows[1][1]), -1.0);
  for (std::size_t n = 2; n < rows.size(); ++n) EXPECT_EQ(std::stod(rows[n][1]), 0.0);
  EXPECT_NE(r.out.find("# tail_bound: 0"), std::string::npos);
  EXPECT_NE(r.out.find("# config_hash: "), std::string::npos);
  EXPECT_NE(r.out.find("# witness: "), std::string::npos);
}

TEST(CliProject, TrivialSymbol) {
  const auto rows = csv_rows(run({"project", "--beta", "0", "--order", "5"}).out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(std::stod(rows[0][1]), 1.0);
  for (std::size_t n = 1; n < 6; ++n) EXPECT_EQ(std::stod(rows[n][1]), 0.0);
}

TEST(CliProject, BetaBelowMinusTwo) {
  const auto r = run({"project", "--beta", "-3"});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("beta must exceed -2"), std::string::npos) << r.err;
}

TEST(CliUsage, MissingOrUnknownArguments) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run({"project"}).code, cli::kUsageError);
  EXPECT_EQ(run({"project", "--beta", "x"}).code, cli::kUsageError);
  EXPECT_EQ(run({"project", "--beta", "1", "--format", "xml"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST(CliScan, FrontierGrid) {
  const auto r = run({"scan", "--beta-min", "-1.9", "--beta-max", "3.9", "--step", "0.1"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 59u);
  for (const auto& row : rows) {
    const double beta = std::stod(row[0]);
    const double lower = std::stod(row[1]);
    const double upper = std::stod(row[2]);
    EXPECT_EQ(row[4] == "Unknown", beta <= -1.0) << beta;
    EXPECT_LE(lower, upper);
    EXPECT_LE(upper, 1.0);
  }
  EXPECT_EQ(rows.front()[0], "-1.9");
  EXPECT_EQ(rows.back()[0], "3.9");
}

TEST(CliScan, UpperBoundOnNonNegativeGrid) {
  const auto rows = csv_rows(run({"scan", "--beta-min", "0", "--beta-max", "4", "--step", "0.5"}).out);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& row : rows) EXPECT_LE(std::stod(row[2]), 2.0 / std::numbers::pi);
}

TEST(CliScan, EmptyRangeAndBadStep) {
  EXPECT_EQ(run({"scan", "--beta-min", "1", "--beta-max", "0", "--step", "0.1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"scan", "--beta-min", "0", "--beta-max", "1", "--step", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run({"scan", "--beta-min", "0", "--beta-max", "1", "--step", "-1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"scan", "--beta-min", "-3", "--beta-max", "1", "--step", "1"}).code, cli::kUsageError);
}

TEST(CliNorm, ThreeMethodsAgree) {
  const auto r = run({"norm", "--beta", "-1"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) EXPECT_NEAR(std::stod(row[2]), 4.0 / std::numbers::pi, 1e-8) << row[1];
  EXPECT_EQ(run({"norm", "--beta", "-2"}).code, cli::kNumericalFailure);
}

TEST(CliNorm, GnScan) {
  const auto rows = csv_rows(run({"norm", "--gn", "1,10,100"}).out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(std::stod(rows[0][1]), 4.0 / std::numbers::pi, 1e-8);
  EXPECT_EQ(run({"norm", "--gn", "0"}).code, cli::kUsageError);
}

TEST(CliDistance, SummaryAndProfile) {
  const auto r = run({"distance", "--beta", "1"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_LT(std::stod(rows[0][3]), 0.05);
  const auto profile = csv_rows(run({"distance", "--beta", "1", "--profile"}).out);
  EXPECT_GE(profile.size(), 6u);
  const auto short_series = run({"distance", "--beta", "1", "--order", "50"});
  EXPECT_EQ(short_series.code, cli::kNumericalFailure);
  EXPECT_NE(short_series.err.find("insufficient resolution"), std::string::npos) << short_series.err;
}

TEST(CliCounterexample, GridValidation) {
  EXPECT_EQ(run({"counterexample", "--betas", "-1.6,-1.7"}).code, cli::kSuccess);
  EXPECT_EQ(run({"counterexample", "--betas", "-1.7,-1.6"}).code, cli::kUsageError);
  EXPECT_EQ(run({"counterexample", "--betas", "-1.7,abc"}).code, cli::kUsageError);
}

TEST(CliVerify, UnknownSuite) {
  const auto r = run({"verify", "nosuch"});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("unknown suite"), std::string::npos);
}

TEST(CliVerify, QuadratureSuitePasses) {
  const auto r = run({"verify", "quadrature"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.out;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NE(r.out.find("# result: PASS"), std::string::npos);
}

TEST(CliVerify, BlochWithShortSeriesNamesResolutionFailure) {
  const auto r = run({"verify", "bloch", "--order", "50"});
  EXPECT_EQ(r.code, cli::kNumericalFailure);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("insufficient resolution"), std::string::npos) << r.out;
}

TEST(CliOutput, JsonMirrorsCsvRows) {
  const auto csv = run({"scan", "--beta-min", "-1", "--beta-max", "1", "--step", "0.5"});
  const auto json = run({"scan", "--beta-min", "-1", "--beta-max", "1", "--step", "0.5", "--format", "json"});
  ASSERT_EQ(json.code, cli::kSuccess);
  const auto doc = nlohmann::json::parse(json.out);
  ASSERT_TRUE(doc.is_array());
  const auto rows = csv_rows(csv.out);
  ASSERT_EQ(doc.size(), rows.size() + 1);
  EXPECT_EQ(doc[0]["record"], "meta");
  EXPECT_EQ(doc[0]["command"], "scan");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& obj = doc[i + 1];
    for (const auto& [key, value] : obj.items()) EXPECT_FALSE(value.is_structured()) << key;
    EXPECT_DOUBLE_EQ(obj["beta"].get<double>(), std::stod(rows[i][0]));
    EXPECT_EQ(obj["verdict"].get<std::string>(), rows[i][4]);
  }
}

TEST(CliOutput, ByteIdenticalReruns) {
  const auto a = temp_path("a.csv");
  const auto b = temp_path("b.csv");
  for (const auto& p : {a, b}) {
    ASSERT_EQ(run({"norm", "--beta", "-0.5", "--out", p.string()}).code, cli::kSuccess);
  }
  EXPECT_EQ(read_file(a), read_file(b));
  EXPECT_FALSE(read_file(a).empty());
  fs::remove(a);
  fs::remove(b);

  EXPECT_EQ(run({"verify", "classify"}).out, run({"verify", "classify"}).out);
  EXPECT_EQ(run({"counterexample", "--betas", "-1.9"}).out, run({"counterexample", "--betas", "-1.9"}).out);
}

TEST(CliOutput, UnwritablePath) {
  EXPECT_EQ(run({"scan", "--beta-min", "0", "--beta-max", "1", "--step", "1", "--out", "/nonexistent/dir/x.csv"}).code,
            cli::kUsageError);
}

TEST(CliConfig, FileOverridesDefaultsAndHash) {
  const auto path = temp_path("run.cfg");
  {
    std::ofstream f(path);
    f << "# coarser quadrature\nradial_order = 64\n\nangular_order=256\nepsilon_schedule = 0.125, 0.0625, 0.03125\n";
  }
  cli::RunConfig cfg;
  const std::string default_hash = cfg.hash();
  cli::apply_config_file(cfg, path.string());
  EXPECT_EQ(cfg.radial_order, 64u);
  EXPECT_EQ(cfg.angular_order, 256u);
  EXPECT_EQ(cfg.epsilon_schedule, (std::vector<double>{0.125, 0.0625, 0.03125}));
  EXPECT_NE(cfg.hash(), default_hash);
  EXPECT_EQ(cfg.hash().size(), 16u);

  const auto r = run({"scan", "--beta-min", "0", "--beta-max", "1", "--step", "1", "--config", path.string()});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find(cfg.hash()), std::string::npos);
  fs::remove(path);
}

TEST(CliConfig, RejectsBadInput) {
  cli::RunConfig cfg;
  EXPECT_THROW(cli::apply_config_text(cfg, "no_such_key = 3\n"), bergman::DomainError);
  EXPECT_THROW(cli::apply_config_text(cfg, "radial_order = banana\n"), bergman::DomainError);
  EXPECT_THROW(cli::apply_config_text(cfg, "radial_order\n"), bergman::DomainError);
  cli::RunConfig zero;
  cli::apply_config_text(zero, "series_order = 0\n");
  EXPECT_THROW(zero.validate(), bergman::DomainError);
  EXPECT_THROW(cli::apply_config_file(cfg, "/nonexistent/run.cfg"), bergman::DomainError);
  EXPECT_EQ(run({"scan", "--beta-min", "0", "--beta-max", "1", "--step", "1", "--config", "/nonexistent/run.cfg"}).code,
            cli::kUsageError);
}

TEST(CliConfig, HashIgnoresOutputSettings) {
  cli::RunConfig a;
  cli::RunConfig b;
  b.format = cli::Format::json;
  b.out = "elsewhere.json";
  EXPECT_EQ(a.hash(), b.hash());
  b.seed = 7;
  EXPECT_NE(a.hash(), b.hash());
}

TEST(CliTable, DoubleFormattingRoundTrips) {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) EXPECT_EQ(std::stod(cli::format_double(v)), v);
}

TEST(CliChecks, SuiteMapping) {
  EXPECT_EQ(*cli::suite_criteria("quadrature"), (std::vector<int>{1, 6}));
  EXPECT_EQ(cli::suite_criteria("all")->size(), static_cast<std::size_t>(cli::kCriterionCount));
  EXPECT_FALSE(cli::suite_criteria("nope").has_value());
  EXPECT_THROW(cli::run_check(99, cli::RunConfig{}), bergman::DomainError);
}
