#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feval/backtest.hpp"
#include "feval/calendar.hpp"

namespace feval::app {

// Flat key = value run configuration ('#' starts a comment). Recognized
// keys are documented in the README; unknown keys are rejected.
struct RunConfig {
  std::string forecasts;
  std::string monthly;
  std::string quarterly;
  std::string targets;

  std::string cpi_series = "CPI";
  std::string unemp_series = "UNEMP";
  std::string labor_series = "LABOR";
  std::string gdp_series = "GDP";

  std::vector<std::string> variables;  // empty = all in forecasts.csv
  std::vector<int> horizons = {-1, 0, 1, 2, 3, 4};
  std::vector<StrategyKind> strategies = {
      StrategyKind::ME, StrategyKind::AR1, StrategyKind::SDME,
      StrategyKind::SDAR1};
  std::vector<int> window_candidates;  // empty = 1..50
  HalfYear training_start{1999, 2};
  HalfYear test_start{2012, 1};
  std::vector<std::pair<HalfYear, HalfYear>> subperiods;
  std::optional<int> hac_bandwidth;  // nullopt = automatic
  std::string out = "out";
  std::string normalized;  // dir with cmd_ingest output; defaults to out
};

RunConfig load_config(const std::string& path);
HalfYear parse_half_year(const std::string& s);

// Simple string table serialized as CSV plus a JSON mirror.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Writes base.csv and base.json atomically (temp file + rename).
void write_table(const std::filesystem::path& base_no_ext, const Table& t);

std::string fmt_num(double v);  // 6 significant digits; blank if non-finite

// Subcommands; return process exit code (0 ok, 1 config/schema, 2 numeric).
int cmd_ingest(const RunConfig& cfg);
int cmd_test_bias(const RunConfig& cfg);
int cmd_backtest(const RunConfig& cfg);
int cmd_synth(const std::string& out_dir, std::uint64_t seed, int start_year,
              int years);

}  // namespace feval::app
