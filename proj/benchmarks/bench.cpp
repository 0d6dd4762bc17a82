#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "feval/backtest.hpp"
#include "feval/bias_tests.hpp"
#include "feval/regression.hpp"

using namespace feval;

namespace {

void fill_regression(Eigen::MatrixXd& X, Eigen::VectorXd& y, int n, int k) {
  std::mt19937 rng(1);
  std::normal_distribution<double> noise(0.0, 1.0);
  X.resize(n, k);
  y.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) X(i, j) = j == 0 ? 1.0 : noise(rng);
    y(i) = noise(rng);
  }
}

std::vector<AlignedObs> make_slice(int n) {
  std::mt19937 rng(2);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<AlignedObs> out;
  HalfYear t{1900, 1};
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    e = 0.5 * e + noise(rng);
    AlignedObs obs;
    obs.period = t;
    obs.forecast = 2.0 + 0.1 * (i % 5);
    obs.realized = obs.forecast + e;
    obs.error = e;
    obs.state = i % 2;
    out.push_back(obs);
    t = t.plus(1);
  }
  return out;
}

void BM_OlsHac(benchmark::State& state) {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  fill_regression(X, y, 200, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ols_hac(X, y));
  }
}
BENCHMARK(BM_OlsHac);

void BM_AutoBandwidth(benchmark::State& state) {
  std::mt19937 rng(3);
  std::normal_distribution<double> noise(0.0, 1.0);
  Eigen::MatrixXd scores(400, 2);
  double e = 0.0;
  for (int i = 0; i < 400; ++i) {
    e = 0.7 * e + noise(rng);
    scores(i, 0) = e;
    scores(i, 1) = noise(rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(nw_auto_bandwidth(scores));
  }
}
BENCHMARK(BM_AutoBandwidth);

void BM_HoldenPeel(benchmark::State& state) {
  auto slice = make_slice(200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(holden_peel(slice));
  }
}
BENCHMARK(BM_HoldenPeel);

void BM_Backtest(benchmark::State& state) {
  auto slice = make_slice(100);
  ForecastPanel panel("X");
  RealizedSeries realized("X");
  StateDummy states;
  for (const auto& obs : slice) {
    panel.insert({obs.period, Horizon{0}}, {obs.forecast, obs.period.end_month()});
    realized.set(obs.period, obs.realized);
    states.d[{obs.period, Horizon{0}}] = *obs.state;
  }
  StrategyConfig cfg;
  cfg.kind = static_cast<StrategyKind>(state.range(0));
  cfg.training_start = HalfYear{1900, 1};
  cfg.test_start = HalfYear{1900, 1}.plus(30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_backtest(panel, realized, &states, cfg, Horizon{0}));
  }
}
BENCHMARK(BM_Backtest)
    ->Arg(static_cast<int>(StrategyKind::ME))
    ->Arg(static_cast<int>(StrategyKind::AR1))
    ->Arg(static_cast<int>(StrategyKind::SDAR1));

}  // namespace

BENCHMARK_MAIN();
