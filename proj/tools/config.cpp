#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "app.hpp"
#include "feval/errors.hpp"

namespace feval::app {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& key) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("expected integer for '" + key + "', got '" + s + "'");
  }
  return value;
}

// "1..50" or "1,2,5".
std::vector<int> parse_int_list(const std::string& s, const std::string& key) {
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    int lo = parse_int(trim(s.substr(0, dots)), key);
    int hi = parse_int(trim(s.substr(dots + 2)), key);
    if (hi < lo) throw ConfigError("empty range for '" + key + "'");
    std::vector<int> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
  }
  std::vector<int> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_int(item, key));
  return out;
}

}  // namespace

HalfYear parse_half_year(const std::string& s) {
  auto pos = s.find_first_of("Hh");
  if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size()) {
    throw ConfigError("expected half-year like 2016H1, got '" + s + "'");
  }
  HalfYear t{parse_int(s.substr(0, pos), "half-year"),
             parse_int(s.substr(pos + 1), "half-year")};
  if (!t.valid()) throw ConfigError("invalid half-year '" + s + "'");
  return t;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);

  RunConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        " is not key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "forecasts") {
      cfg.forecasts = value;
    } else if (key == "monthly") {
      cfg.monthly = value;
    } else if (key == "quarterly") {
      cfg.quarterly = value;
    } else if (key == "targets") {
      cfg.targets = value;
    } else if (key == "cpi_series") {
      cfg.cpi_series = value;
    } else if (key == "unemp_series") {
      cfg.unemp_series = value;
    } else if (key == "labor_series") {
      cfg.labor_series = value;
    } else if (key == "gdp_series") {
      cfg.gdp_series = value;
    } else if (key == "variables") {
      cfg.variables = split(value, ',');
    } else if (key == "horizons") {
      cfg.horizons = parse_int_list(value, key);
      for (int h : cfg.horizons) {
        if (h < Horizon::kMin || h > Horizon::kMax) {
          throw ConfigError("horizon " + std::to_string(h) +
                            " outside [-1, 6]");
        }
      }
    } else if (key == "strategies") {
      cfg.strategies.clear();
      for (const auto& s : split(value, ',')) {
        cfg.strategies.push_back(strategy_from_string(s));
      }
    } else if (key == "window_candidates") {
      cfg.window_candidates = parse_int_list(value, key);
      for (int w : cfg.window_candidates) {
        if (w < 1) throw ConfigError("window candidates must be >= 1");
      }
      if (cfg.window_candidates.empty()) {
        throw ConfigError("window_candidates must be non-empty");
      }
    } else if (key == "training_start") {
      cfg.training_start = parse_half_year(value);
    } else if (key == "test_start") {
      cfg.test_start = parse_half_year(value);
    } else if (key == "subperiods") {
      cfg.subperiods.clear();
      for (const auto& range : split(value, ',')) {
        auto colon = range.find(':');
        if (colon == std::string::npos) {
          throw ConfigError("subperiod must be from:to, got '" + range + "'");
        }
        cfg.subperiods.emplace_back(
            parse_half_year(trim(range.substr(0, colon))),
            parse_half_year(trim(range.substr(colon + 1))));
      }
    } else if (key == "hac_bandwidth") {
      if (value == "auto") {
        cfg.hac_bandwidth = std::nullopt;
      } else {
        int bw = parse_int(value, key);
        if (bw < 0) throw ConfigError("hac_bandwidth must be >= 0 or auto");
        cfg.hac_bandwidth = bw;
      }
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "normalized") {
      cfg.normalized = value;
    } else {
      throw ConfigError("unknown config key '" + key + "' at line " +
                        std::to_string(line_no));
    }
  }
  if (!(cfg.training_start < cfg.test_start)) {
    throw ConfigError("training_start must come before test_start");
  }
  return cfg;
}

}  // namespace feval::app
