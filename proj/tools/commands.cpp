#include <algorithm>
#include <charconv>
#include <functional>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "app.hpp"
#include "feval/csv.hpp"
#include "feval/errors.hpp"

namespace feval::app {

namespace fs = std::filesystem;

namespace {

struct Dataset {
  std::map<std::string, ForecastPanel> panels;
  std::map<std::string, RealizedSeries> realized;
  StateDummy states;
  bool has_states = false;
};

std::vector<std::string> selected_variables(
    const RunConfig& cfg, const std::map<std::string, ForecastPanel>& panels) {
  if (!cfg.variables.empty()) return cfg.variables;
  std::vector<std::string> vars;
  for (const auto& [name, _] : panels) vars.push_back(name);
  return vars;
}

const MonthlySeries& monthly_series(
    const std::map<std::string, MonthlySeries>& monthly,
    const std::string& name, const std::string& path) {
  auto it = monthly.find(name);
  if (it == monthly.end()) {
    throw ConfigError("series '" + name + "' not found in " + path);
  }
  return it->second;
}

// Loads the raw inputs and builds realized series and state dummies for
// every selected variable.
Dataset load_dataset(const RunConfig& cfg) {
  Dataset ds;
  if (cfg.forecasts.empty()) {
    throw ConfigError("config key 'forecasts' is required");
  }
  ds.panels = load_forecast_csv(cfg.forecasts);

  auto variables = selected_variables(cfg, ds.panels);
  bool wants_cpi = false, wants_gdp = false, wants_unrate = false;
  for (const auto& v : variables) {
    if (v == "CPI") wants_cpi = true;
    else if (v == "GDP") wants_gdp = true;
    else if (v == "UNRATE") wants_unrate = true;
    else throw ConfigError("unsupported variable '" + v +
                           "' (expected CPI, GDP, or UNRATE)");
  }

  std::map<std::string, MonthlySeries> monthly;
  if (wants_cpi || wants_unrate) {
    if (cfg.monthly.empty()) {
      throw ConfigError("monthly.csv required for CPI/UNRATE but no "
                        "'monthly' key given");
    }
    monthly = load_monthly_csv(cfg.monthly);
  }

  if (wants_cpi) {
    if (cfg.targets.empty()) {
      throw ConfigError("targets.csv required when CPI is selected but no "
                        "'targets' key given");
    }
    const auto& cpi = monthly_series(monthly, cfg.cpi_series, cfg.monthly);
    auto series = semiannual_cpi_inflation(cpi);
    ds.realized.emplace("CPI", RealizedSeries{"CPI"});
    for (const auto& [t, v] : series.values()) ds.realized["CPI"].set(t, v);

    TargetSchedule targets = load_target_schedule(cfg.targets);
    QuarterlySeries qinfl = quarterly_yoy_inflation(cpi);
    std::set<PanelKey> coords;
    for (const auto& [var, panel] : ds.panels) {
      if (std::find(variables.begin(), variables.end(), var) ==
          variables.end()) {
        continue;
      }
      for (const auto& [key, _] : panel.cells()) coords.insert(key);
    }
    ds.states = make_state_dummy(
        qinfl, targets, std::vector<PanelKey>(coords.begin(), coords.end()));
    ds.has_states = true;
  }

  if (wants_unrate) {
    const auto& unemp =
        monthly_series(monthly, cfg.unemp_series, cfg.monthly);
    const auto& labor =
        monthly_series(monthly, cfg.labor_series, cfg.monthly);
    auto series = semiannual_unemployment(unemp, labor);
    ds.realized.emplace("UNRATE", RealizedSeries{"UNRATE"});
    for (const auto& [t, v] : series.values()) ds.realized["UNRATE"].set(t, v);
  }

  if (wants_gdp) {
    if (cfg.quarterly.empty()) {
      throw ConfigError("quarterly.csv required for GDP but no 'quarterly' "
                        "key given");
    }
    auto quarterly = load_quarterly_csv(cfg.quarterly);
    auto it = quarterly.find(cfg.gdp_series);
    if (it == quarterly.end()) {
      throw ConfigError("series '" + cfg.gdp_series + "' not found in " +
                        cfg.quarterly);
    }
    auto series = semiannual_gdp_growth(it->second);
    ds.realized.emplace("GDP", RealizedSeries{"GDP"});
    for (const auto& [t, v] : series.values()) ds.realized["GDP"].set(t, v);
  }

  // Keep only the selected panels.
  std::map<std::string, ForecastPanel> kept;
  for (const auto& v : variables) {
    auto it = ds.panels.find(v);
    if (it != ds.panels.end()) kept.insert(*it);
  }
  ds.panels = std::move(kept);
  return ds;
}

std::optional<int> state_of(const Dataset& ds, PanelKey key) {
  if (!ds.has_states) return std::nullopt;
  auto it = ds.states.d.find(key);
  if (it == ds.states.d.end()) return std::nullopt;
  return it->second;
}

// --- Normalized-file round trip -------------------------------------------

std::vector<std::vector<std::string>> read_csv_rows(const fs::path& path,
                                                    std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string() +
                             " (run 'feval ingest' first?)");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    fields.resize(columns);
    rows.push_back(std::move(fields));
  }
  return rows;
}

int to_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("bad integer '" + s + "' in normalized file");
  }
  return v;
}

Dataset load_normalized(const RunConfig& cfg) {
  fs::path dir(cfg.normalized.empty() ? cfg.out : cfg.normalized);
  Dataset ds;

  for (const auto& row : read_csv_rows(dir / "panel.csv", 10)) {
    const std::string& var = row[0];
    HalfYear target{to_int(row[1]), to_int(row[2])};
    Horizon h{to_int(row[3])};
    ds.panels.try_emplace(var, ForecastPanel{var});
    if (!row[6].empty()) {
      YearMonth published{to_int(row[4]), to_int(row[5])};
      ds.panels[var].insert(PanelKey{target, h},
                            ForecastCell{std::stod(row[6]), published});
    }
  }
  for (const auto& row : read_csv_rows(dir / "realized.csv", 4)) {
    ds.realized.try_emplace(row[0], RealizedSeries{row[0]});
    if (!row[3].empty()) {
      ds.realized[row[0]].set(HalfYear{to_int(row[1]), to_int(row[2])},
                              std::stod(row[3]));
    }
  }
  fs::path states_path = dir / "states.csv";
  if (fs::exists(states_path)) {
    for (const auto& row : read_csv_rows(states_path, 4)) {
      ds.states.d[PanelKey{HalfYear{to_int(row[0]), to_int(row[1])},
                           Horizon{to_int(row[2])}}] = to_int(row[3]);
    }
    ds.has_states = true;
  }
  return ds;
}

std::string int_or_blank(std::optional<int> v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace

int cmd_ingest(const RunConfig& cfg) {
  Dataset ds = load_dataset(cfg);
  fs::path out(cfg.out);
  fs::create_directories(out);

  Table panel;
  panel.columns = {"variable",         "target_year",      "target_half",
                   "horizon",          "publication_year", "publication_month",
                   "forecast",         "realized",         "error",
                   "state"};
  for (const auto& [var, p] : ds.panels) {
    const RealizedSeries* realized = nullptr;
    if (auto it = ds.realized.find(var); it != ds.realized.end()) {
      realized = &it->second;
    }
    for (const auto& [key, cell] : p.cells()) {
      std::optional<double> y;
      if (realized) y = realized->at(key.target);
      panel.rows.push_back({var,
                            std::to_string(key.target.year),
                            std::to_string(key.target.half),
                            std::to_string(key.h.h),
                            std::to_string(cell.published.year),
                            std::to_string(cell.published.month),
                            fmt_num(cell.value),
                            y ? fmt_num(*y) : "",
                            y ? fmt_num(*y - cell.value) : "",
                            int_or_blank(state_of(ds, key))});
    }
  }
  write_table(out / "panel", panel);

  Table realized;
  realized.columns = {"variable", "year", "half", "value"};
  for (const auto& [var, series] : ds.realized) {
    for (const auto& [t, v] : series.values()) {
      realized.rows.push_back({var, std::to_string(t.year),
                               std::to_string(t.half), fmt_num(v)});
    }
  }
  write_table(out / "realized", realized);

  if (ds.has_states) {
    Table states;
    states.columns = {"target_year", "target_half", "horizon", "state"};
    for (const auto& [key, d] : ds.states.d) {
      states.rows.push_back({std::to_string(key.target.year),
                             std::to_string(key.target.half),
                             std::to_string(key.h.h), std::to_string(d)});
    }
    write_table(out / "states", states);
    std::cout << "states: " << states.rows.size() << " rows\n";
  }

  std::cout << "panel: " << panel.rows.size() << " rows\n"
            << "realized: " << realized.rows.size() << " rows\n";
  return 0;
}

namespace {

struct BiasRow {
  std::string variable;
  int horizon = 0;
  std::string test;
  std::optional<TestReport> report;
  std::string diagnostic;
};

std::vector<std::string> render_bias_row(const BiasRow& row) {
  std::vector<std::string> cells(25, "");
  cells[0] = row.variable;
  cells[1] = std::to_string(row.horizon);
  cells[2] = row.test;
  if (row.report) {
    const TestReport& r = *row.report;
    cells[3] = std::to_string(r.n);
    auto put_coef = [&](const std::string& name, int value_col) {
      if (const CoefEstimate* c = r.coefficient(name); c && c->value) {
        cells[value_col] = fmt_num(*c->value);
        if (c->se) cells[value_col + 1] = fmt_num(*c->se);
      }
    };
    put_coef("alpha", 4);
    put_coef("beta", 6);
    put_coef("gamma", 8);
    put_coef("delta", 10);
    if (r.joint) {
      cells[12] = fmt_num(r.joint->statistic);
      cells[13] = r.joint->df > 0 ? std::to_string(r.joint->df) : "";
      cells[14] = fmt_num(r.joint->p_value);
      cells[15] = r.joint->p_value < 0.05 ? "1" : "0";
    }
    for (std::size_t i = 0; i < r.one_sided.size() && i < 2; ++i) {
      int base = 16 + static_cast<int>(i) * 4;
      cells[base] = r.one_sided[i].name;
      cells[base + 1] = to_string(r.one_sided[i].report.alternative);
      cells[base + 2] = fmt_num(r.one_sided[i].report.statistic);
      cells[base + 3] = fmt_num(r.one_sided[i].report.p_value);
    }
    std::string flags;
    for (const auto& f : r.flags) {
      if (!flags.empty()) flags += ';';
      flags += f;
    }
    cells[24] = flags;
  } else {
    cells[24] = row.diagnostic;
  }
  return cells;
}

}  // namespace

int cmd_test_bias(const RunConfig& cfg) {
  Dataset ds = load_normalized(cfg);
  fs::path out(cfg.out);
  fs::create_directories(out);

  int exit_code = 0;
  Table table;
  table.columns = {"variable", "horizon",  "test",     "n",
                   "alpha",    "alpha_se", "beta",     "beta_se",
                   "gamma",    "gamma_se", "delta",    "delta_se",
                   "statistic", "df",      "p_value",  "significant_5pct",
                   "os1_coef", "os1_alt",  "os1_stat", "os1_p",
                   "os2_coef", "os2_alt",  "os2_stat", "os2_p",
                   "diagnostic"};

  auto variables = selected_variables(cfg, ds.panels);
  for (const auto& var : variables) {
    auto pit = ds.panels.find(var);
    auto rit = ds.realized.find(var);
    if (pit == ds.panels.end() || rit == ds.realized.end()) continue;
    for (int h : cfg.horizons) {
      auto slice = aligned_slice(pit->second, rit->second,
                                 ds.has_states ? &ds.states.d : nullptr,
                                 Horizon{h});
      using Runner = std::function<TestReport()>;
      std::vector<std::pair<std::string, Runner>> runners = {
          {"holden_peel",
           [&] { return holden_peel(slice, cfg.hac_bandwidth); }},
          {"mincer_zarnowitz",
           [&] { return mincer_zarnowitz(slice, cfg.hac_bandwidth); }},
          {"sd_holden_peel",
           [&] { return sd_holden_peel(slice, cfg.hac_bandwidth); }},
          {"sd_mincer_zarnowitz",
           [&] { return sd_mincer_zarnowitz(slice, cfg.hac_bandwidth); }},
          {"mincer_zarnowitz_state1",
           [&] { return subsample_mz(slice, 1, cfg.hac_bandwidth); }},
          {"mincer_zarnowitz_state0",
           [&] { return subsample_mz(slice, 0, cfg.hac_bandwidth); }},
      };
      for (auto& [name, run] : runners) {
        BiasRow row{var, h, name, std::nullopt, ""};
        try {
          TestReport r = run();
          r.horizon = h;
          row.report = std::move(r);
        } catch (const TooFewObservationsError& e) {
          row.diagnostic = e.what();
        } catch (const ConstantRegressorError& e) {
          row.diagnostic = e.what();
        } catch (const RegimeTooSmallError& e) {
          row.diagnostic = e.what();
        } catch (const Error& e) {
          row.diagnostic = e.what();
          exit_code = 2;
        }
        table.rows.push_back(render_bias_row(row));
      }
    }
  }
  write_table(out / "bias_tests", table);
  std::cout << "bias_tests: " << table.rows.size() << " rows\n";
  return exit_code;
}

int cmd_backtest(const RunConfig& cfg) {
  Dataset ds = load_normalized(cfg);
  fs::path out(cfg.out);
  fs::create_directories(out);

  int exit_code = 0;
  Table subperiods;
  subperiods.columns = {"variable", "strategy", "horizon",
                        "from",     "to",       "n",
                        "rmsfe",    "baseline_rmsfe", "rrmsfe"};

  auto variables = selected_variables(cfg, ds.panels);
  for (const auto& var : variables) {
    auto pit = ds.panels.find(var);
    auto rit = ds.realized.find(var);
    if (pit == ds.panels.end() || rit == ds.realized.end()) continue;
    for (StrategyKind kind : cfg.strategies) {
      for (int h : cfg.horizons) {
        StrategyConfig sc;
        sc.kind = kind;
        sc.window_candidates = cfg.window_candidates;
        sc.training_start = cfg.training_start;
        sc.test_start = cfg.test_start;

        BacktestReport report;
        try {
          report = run_backtest(pit->second, rit->second,
                                ds.has_states ? &ds.states : nullptr, sc,
                                Horizon{h});
        } catch (const EmptyTestSetError& e) {
          std::cerr << var << " " << to_string(kind) << " h=" << h << ": "
                    << e.what() << " (skipped)\n";
          continue;
        }

        Table t;
        t.columns = {"origin",       "raw",   "corrected",     "rmsfe",
                     "rrmsfe",       "chosen_window", "pass_through",
                     "flags"};
        for (const auto& rec : report.origins) {
          std::string flags;
          for (const auto& f : rec.flags) {
            if (!flags.empty()) flags += ';';
            flags += f;
          }
          t.rows.push_back({rec.origin.str(), fmt_num(rec.raw),
                            fmt_num(rec.corrected), fmt_num(rec.rmsfe),
                            fmt_num(rec.rrmsfe),
                            int_or_blank(rec.chosen_window),
                            rec.pass_through ? "1" : "0", flags});
        }
        std::string stem = "backtest_" + var + "_" + to_string(kind) + "_h" +
                           std::to_string(h);
        write_table(out / stem, t);

        for (const auto& [from, to] : cfg.subperiods) {
          try {
            auto rows = subperiod_summary(report, {{from, to}});
            for (const auto& r : rows) {
              subperiods.rows.push_back(
                  {var, to_string(kind), std::to_string(h), r.from.str(),
                   r.to.str(), std::to_string(r.n), fmt_num(r.rmsfe),
                   fmt_num(r.baseline_rmsfe), fmt_num(r.rrmsfe)});
            }
          } catch (const EmptySubperiodError& e) {
            std::cerr << var << " " << to_string(kind) << " h=" << h << ": "
                      << e.what() << "\n";
          }
        }
      }
    }
  }
  if (!cfg.subperiods.empty()) {
    write_table(out / "subperiods", subperiods);
  }
  std::cout << "backtest reports written to " << out.string() << "\n";
  return exit_code;
}

// --- Synthetic fixture generator ------------------------------------------

int cmd_synth(const std::string& out_dir, std::uint64_t seed, int start_year,
              int years) {
  fs::path out(out_dir);
  fs::create_directories(out);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  const int last_year = start_year + years + 2;

  // Monthly CPI: YoY growth follows an AR(1) around 2 percent.
  MonthlySeries cpi;
  double infl = 2.0;
  for (int year = start_year; year <= last_year; ++year) {
    for (int month = 1; month <= 12; ++month) {
      YearMonth m{year, month};
      if (year == start_year) {
        cpi.set(m, 100.0);
        continue;
      }
      if (month == 1) infl = 2.0 + 0.8 * (infl - 2.0) + 0.6 * noise(rng);
      double prev = *cpi.at(YearMonth::from_index(m.index() - 12));
      cpi.set(m, prev * (1.0 + infl / 100.0));
    }
  }

  // Labor force and unemployment counts.
  MonthlySeries labor, unemp;
  for (int year = start_year; year <= last_year; ++year) {
    for (int month = 1; month <= 12; ++month) {
      YearMonth m{year, month};
      labor.set(m, 27000.0 + 10.0 * (year - start_year));
      double rate = 3.5 + 0.3 * noise(rng);
      unemp.set(m, *labor.at(m) * rate / 100.0);
    }
  }

  // Quarterly GDP levels growing about 2.5 percent YoY.
  QuarterlySeries gdp;
  for (int year = start_year; year <= last_year; ++year) {
    for (int q = 1; q <= 4; ++q) {
      Quarter quarter{year, q};
      if (year == start_year) {
        gdp.set(quarter, 100.0 + q);
        continue;
      }
      double prev = *gdp.at(quarter.plus(-4));
      gdp.set(quarter, prev * (1.0 + (2.5 + 0.8 * noise(rng)) / 100.0));
    }
  }

  auto realized_cpi = semiannual_cpi_inflation(cpi);
  auto realized_un = semiannual_unemployment(unemp, labor);
  auto realized_gdp = semiannual_gdp_growth(gdp);

  // Forecasts: realized minus an AR(1) error per (variable, horizon);
  // first issues in Feb/Aug, second issues in May/Nov.
  std::ofstream fc(out / "forecasts.csv");
  fc << "variable,publication_year,publication_month,target_year,"
        "target_half,value\n";
  struct VarSpec {
    const char* name;
    const RealizedSeries* realized;
  };
  const VarSpec specs[] = {{"CPI", &realized_cpi},
                           {"GDP", &realized_gdp},
                           {"UNRATE", &realized_un}};
  for (const auto& spec : specs) {
    std::map<int, double> last_error;  // per horizon
    for (int year = start_year + 2; year <= start_year + years; ++year) {
      for (int half = 1; half <= 2; ++half) {
        HalfYear t{year, half};
        for (int issue = 0; issue < 2; ++issue) {
          YearMonth pub{year, (half == 1 ? 2 : 8) + 3 * issue};
          for (int step = 0; step < 3; ++step) {
            HalfYear target = t.plus(step);
            auto y = spec.realized->at(target);
            if (!y) continue;
            int h = classify_horizon(pub, target).h;
            double scale = 0.15 + 0.08 * h;
            double e = 0.6 * last_error[h] + scale * noise(rng);
            last_error[h] = e;
            double forecast = round1(*y - e);
            fc << spec.name << ',' << pub.year << ',' << pub.month << ','
               << target.year << ',' << target.half << ',' << forecast
               << '\n';
          }
        }
      }
    }
  }
  fc.close();

  std::ofstream mo(out / "monthly.csv");
  mo << "series,year,month,value\n";
  char buf[64];
  auto put_monthly = [&](const char* name, const MonthlySeries& s) {
    for (const auto& [m, v] : s.values()) {
      std::snprintf(buf, sizeof(buf), "%.6f", v);
      mo << name << ',' << m.year << ',' << m.month << ',' << buf << '\n';
    }
  };
  put_monthly("CPI", cpi);
  put_monthly("UNEMP", unemp);
  put_monthly("LABOR", labor);
  mo.close();

  std::ofstream qt(out / "quarterly.csv");
  qt << "series,year,quarter,value\n";
  for (const auto& [q, v] : gdp.values()) {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    qt << "GDP," << q.year << ',' << q.q << ',' << buf << '\n';
  }
  qt.close();

  std::ofstream tg(out / "targets.csv");
  tg << "from_year,from_month,to_year,to_month,lower,upper,midpoint,basis\n";
  tg << start_year << ",1," << last_year << ",12,2,2,2,headline\n";
  tg.close();

  std::ofstream cf(out / "config.txt");
  cf << "forecasts = " << (out / "forecasts.csv").string() << "\n"
     << "monthly = " << (out / "monthly.csv").string() << "\n"
     << "quarterly = " << (out / "quarterly.csv").string() << "\n"
     << "targets = " << (out / "targets.csv").string() << "\n"
     << "variables = CPI,GDP,UNRATE\n"
     << "horizons = 0,1,2,3,4\n"
     << "training_start = " << HalfYear{start_year + 2, 1}.str() << "\n"
     << "test_start = " << HalfYear{start_year + 10, 1}.str() << "\n"
     << "out = " << (out / "run").string() << "\n";
  cf.close();

  std::cout << "synthetic dataset written to " << out.string() << "\n";
  return 0;
}

}  // namespace feval::app
