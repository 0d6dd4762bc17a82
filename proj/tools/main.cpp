#include <iostream>

#include <CLI11.hpp>

#include "app.hpp"
#include "feval/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Forecast evaluation toolkit: error panels, unbiasedness "
               "tests, and bias-correction backtests"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  std::uint64_t seed = 0;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "run configuration file")
        ->required();
    cmd->add_option("--out", out_override, "output directory override");
  };

  CLI::App* ingest = app.add_subcommand(
      "ingest", "parse raw CSVs and write the normalized panel files");
  add_run_options(ingest);

  CLI::App* test_bias = app.add_subcommand(
      "test-bias", "run unbiasedness tests on the normalized panel");
  add_run_options(test_bias);

  CLI::App* backtest = app.add_subcommand(
      "backtest", "run bias-correction backtests on the normalized panel");
  add_run_options(backtest);

  std::string synth_out = "synth";
  int synth_start_year = 1999;
  int synth_years = 26;
  CLI::App* synth = app.add_subcommand(
      "synth", "generate a seeded synthetic fixture dataset");
  synth->add_option("--out", synth_out, "output directory");
  synth->add_option("--seed", seed, "RNG seed");
  synth->add_option("--start-year", synth_start_year, "first data year");
  synth->add_option("--years", synth_years, "number of forecasted years");

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      return feval::app::cmd_synth(synth_out, seed, synth_start_year,
                                   synth_years);
    }
    feval::app::RunConfig cfg = feval::app::load_config(config_path);
    if (!out_override.empty()) cfg.out = out_override;
    if (ingest->parsed()) return feval::app::cmd_ingest(cfg);
    if (test_bias->parsed()) return feval::app::cmd_test_bias(cfg);
    if (backtest->parsed()) return feval::app::cmd_backtest(cfg);
  } catch (const feval::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const feval::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const feval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
