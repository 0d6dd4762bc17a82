#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feval/bias_tests.hpp"
#include "feval/panel.hpp"

namespace feval {

enum class StrategyKind { PassThrough, ME, AR1, SDME, SDAR1 };

std::string to_string(StrategyKind kind);
StrategyKind strategy_from_string(const std::string& s);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::AR1;
  std::vector<int> window_candidates;  // ME only; defaults to 1..50
  HalfYear training_start{1999, 2};
  HalfYear test_start{2012, 1};
};

/// One correction decision at a forecast origin.
struct Correction {
  double value = 0.0;          // zero whenever pass_through
  bool pass_through = false;
  bool identifiable = true;
  std::optional<int> window;   // chosen w_t (ME / SD-ME rolling use)
  std::vector<double> coefficients;  // strategy-dependent fit
  std::vector<std::string> flags;
};

// --- Strategy primitives ---------------------------------------------------
//
// `history` is the chronological list of observed forecast errors dated
// strictly before the origin; gaps show as missing periods. `state` on an
// entry is the inflation-state dummy at that period, when defined.

/// Mean of the most recent w observed errors; pass-through when fewer
/// than w are available.
Correction me_correct(std::span<const SliceEntry> history, int w);

/// Window minimizing the pseudo-out-of-sample validation RMSE, computed
/// by correcting each feasible validation period with its own past w
/// errors. Ties break to the smallest w; an empty validation set falls
/// back to w = 1 with a flag.
int select_me_window(std::span<const SliceEntry> history,
                     std::span<const int> candidates, bool* flagged = nullptr);

/// AR(1) without intercept on calendar-consecutive error pairs;
/// correction alpha * e_{t-1}. Pass-through when fewer than two pairs
/// exist, the denominator vanishes, or e_{t-1} is unobserved.
Correction ar1_correct(std::span<const SliceEntry> history, HalfYear origin);

/// State-wise mean error over the window; requires the origin state.
/// Pass-through when the origin state was never observed in the window.
Correction sd_me_correct(std::span<const SliceEntry> history,
                         std::optional<int> origin_state);

/// Two-regressor AR(1) with a state interaction; falls back to the pooled
/// AR(1) when either state has fewer than two pairs or the origin state
/// is unknown.
Correction sd_ar1_correct(std::span<const SliceEntry> history,
                          HalfYear origin, std::optional<int> origin_state);

// --- Recursive evaluation --------------------------------------------------

struct OriginRecord {
  HalfYear origin;
  double raw = 0.0;
  double correction = 0.0;
  double corrected = 0.0;
  double realized = 0.0;
  bool pass_through = false;
  std::optional<int> chosen_window;
  double rmsfe = 0.0;           // over the accumulated test set
  double baseline_rmsfe = 0.0;  // uncorrected forecasts, same test set
  double rrmsfe = 1.0;
  std::vector<std::string> flags;
};

struct BacktestReport {
  StrategyKind kind = StrategyKind::AR1;
  int horizon = 0;
  HalfYear training_start;
  HalfYear test_start;
  std::vector<OriginRecord> origins;
};

/// Recursive out-of-sample evaluation for one (strategy, horizon) pair.
/// Model-based strategies refit on the expanding training window at each
/// origin; ME re-selects its window from the validation set. Origins where
/// no correction is feasible pass the raw forecast through and still
/// contribute to the test set. Throws EmptyTestSetError when no origin has
/// both a forecast and a realized value.
BacktestReport run_backtest(const ForecastPanel& panel,
                            const RealizedSeries& realized,
                            const StateDummy* states,
                            const StrategyConfig& config, Horizon h);

struct SubperiodRow {
  HalfYear from;
  HalfYear to;
  int n = 0;
  double rmsfe = 0.0;
  double baseline_rmsfe = 0.0;
  double rrmsfe = 1.0;
};

/// RMSFE ratios over target-period ranges (e.g. pre/post break).
/// Throws EmptySubperiodError for a range containing no test origin.
std::vector<SubperiodRow> subperiod_summary(
    const BacktestReport& report,
    const std::vector<std::pair<HalfYear, HalfYear>>& ranges);

}  // namespace feval
