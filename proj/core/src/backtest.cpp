#include "feval/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "feval/errors.hpp"

namespace feval {

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::PassThrough:
      return "PASS";
    case StrategyKind::ME:
      return "ME";
    case StrategyKind::AR1:
      return "AR1";
    case StrategyKind::SDME:
      return "SD-ME";
    case StrategyKind::SDAR1:
      return "SD-AR1";
  }
  return "?";
}

StrategyKind strategy_from_string(const std::string& s) {
  if (s == "PASS") return StrategyKind::PassThrough;
  if (s == "ME") return StrategyKind::ME;
  if (s == "AR1") return StrategyKind::AR1;
  if (s == "SD-ME" || s == "SDME") return StrategyKind::SDME;
  if (s == "SD-AR1" || s == "SDAR1") return StrategyKind::SDAR1;
  throw ConfigError("unknown strategy: " + s);
}

namespace {

Correction pass_through(std::string flag) {
  Correction c;
  c.pass_through = true;
  c.identifiable = false;
  c.flags.push_back(std::move(flag));
  return c;
}

struct Pair {
  double current = 0.0;
  double lagged = 0.0;
  std::optional<int> state;  // state of the current-period error
};

// Calendar-consecutive (e_s, e_{s-1}) pairs; gaps drop pairs.
std::vector<Pair> consecutive_pairs(std::span<const SliceEntry> history) {
  std::vector<Pair> pairs;
  for (std::size_t i = 1; i < history.size(); ++i) {
    if (history[i].period.ordinal() - history[i - 1].period.ordinal() != 1) {
      continue;
    }
    pairs.push_back({history[i].error, history[i - 1].error,
                     history[i].state});
  }
  return pairs;
}

std::optional<double> last_error_at(std::span<const SliceEntry> history,
                                    HalfYear origin) {
  if (history.empty()) return std::nullopt;
  const auto& last = history.back();
  if (last.period.ordinal() != origin.ordinal() - 1) return std::nullopt;
  return last.error;
}

}  // namespace

Correction me_correct(std::span<const SliceEntry> history, int w) {
  if (w < 1) throw Error("window must be >= 1");
  if (history.size() < static_cast<std::size_t>(w)) {
    return pass_through("insufficient_history");
  }
  double sum = 0.0;
  for (std::size_t i = history.size() - w; i < history.size(); ++i) {
    sum += history[i].error;
  }
  Correction c;
  c.value = sum / w;
  c.window = w;
  return c;
}

int select_me_window(std::span<const SliceEntry> history,
                     std::span<const int> candidates, bool* flagged) {
  if (flagged) *flagged = false;
  std::vector<int> ws(candidates.begin(), candidates.end());
  std::sort(ws.begin(), ws.end());

  int best_w = -1;
  double best_rmse = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(history.size());
  for (int w : ws) {
    if (w < 1) throw Error("window candidates must be >= 1");
    double sum = 0.0;
    int count = 0;
    for (int i = w; i < n; ++i) {
      double mean = 0.0;
      for (int j = i - w; j < i; ++j) mean += history[j].error;
      mean /= w;
      double diff = mean - history[i].error;
      sum += diff * diff;
      ++count;
    }
    if (count == 0) continue;  // window infeasible everywhere
    double rmse = std::sqrt(sum / count);
    if (rmse < best_rmse) {
      best_rmse = rmse;
      best_w = w;
    }
  }
  if (best_w < 0) {
    if (flagged) *flagged = true;
    return 1;
  }
  return best_w;
}

Correction ar1_correct(std::span<const SliceEntry> history, HalfYear origin) {
  auto pairs = consecutive_pairs(history);
  if (pairs.size() < 2) {
    return pass_through("insufficient_pairs");
  }
  double num = 0.0;
  double den = 0.0;
  for (const auto& p : pairs) {
    num += p.current * p.lagged;
    den += p.lagged * p.lagged;
  }
  if (den == 0.0) {
    return pass_through("zero_denominator");
  }
  auto last = last_error_at(history, origin);
  if (!last) {
    return pass_through("missing_last_error");
  }
  double alpha = num / den;
  Correction c;
  c.value = alpha * *last;
  c.coefficients = {alpha};
  return c;
}

Correction sd_me_correct(std::span<const SliceEntry> history,
                         std::optional<int> origin_state) {
  if (!origin_state) {
    return pass_through("unknown_origin_state");
  }
  double sum[2] = {0.0, 0.0};
  int count[2] = {0, 0};
  for (const auto& entry : history) {
    if (!entry.state) continue;
    sum[*entry.state] += entry.error;
    ++count[*entry.state];
  }
  if (count[*origin_state] == 0) {
    return pass_through("current_state_unseen");
  }
  Correction c;
  c.value = sum[*origin_state] / count[*origin_state];
  // alpha is the below-target (d=1) mean, delta the complement.
  if (count[1] > 0) c.coefficients.push_back(sum[1] / count[1]);
  if (count[0] > 0) c.coefficients.push_back(sum[0] / count[0]);
  return c;
}

Correction sd_ar1_correct(std::span<const SliceEntry> history,
                          HalfYear origin, std::optional<int> origin_state) {
  auto pairs = consecutive_pairs(history);
  int by_state[2] = {0, 0};
  std::vector<Pair> usable;
  for (const auto& p : pairs) {
    if (!p.state) continue;
    ++by_state[*p.state];
    usable.push_back(p);
  }

  auto fallback = [&]() {
    Correction c = ar1_correct(history, origin);
    c.flags.push_back("fallback_pooled");
    return c;
  };

  if (!origin_state || by_state[0] < 2 || by_state[1] < 2) {
    return fallback();
  }

  // Normal equations for e_s = a0 e_{s-1} + a1 d_s e_{s-1}.
  double s11 = 0.0, s12 = 0.0, s22 = 0.0, b1 = 0.0, b2 = 0.0;
  for (const auto& p : usable) {
    double x1 = p.lagged;
    double x2 = *p.state * p.lagged;
    s11 += x1 * x1;
    s12 += x1 * x2;
    s22 += x2 * x2;
    b1 += x1 * p.current;
    b2 += x2 * p.current;
  }
  double det = s11 * s22 - s12 * s12;
  if (det <= 1e-12 * s11 * s22 || s11 == 0.0 || s22 == 0.0) {
    return fallback();
  }
  auto last = last_error_at(history, origin);
  if (!last) {
    return pass_through("missing_last_error");
  }
  double alpha0 = (s22 * b1 - s12 * b2) / det;
  double alpha1 = (s11 * b2 - s12 * b1) / det;
  Correction c;
  c.value = alpha0 * *last + alpha1 * *origin_state * *last;
  c.coefficients = {alpha0, alpha1};
  return c;
}

BacktestReport run_backtest(const ForecastPanel& panel,
                            const RealizedSeries& realized,
                            const StateDummy* states,
                            const StrategyConfig& config, Horizon h) {
  if (config.test_start <= config.training_start) {
    throw ConfigError("test_start must come after training_start");
  }
  std::vector<int> candidates = config.window_candidates;
  if (candidates.empty()) {
    candidates.resize(50);
    std::iota(candidates.begin(), candidates.end(), 1);
  }

  auto slice =
      aligned_slice(panel, realized, states ? &states->d : nullptr, h);

  BacktestReport report;
  report.kind = config.kind;
  report.horizon = h.h;
  report.training_start = config.training_start;
  report.test_start = config.test_start;

  double sum_sq = 0.0;
  double baseline_sum_sq = 0.0;
  int count = 0;

  std::vector<SliceEntry> history;
  for (const auto& obs : slice) {
    if (obs.period < config.test_start) continue;

    history.clear();
    for (const auto& past : slice) {
      if (past.period < config.training_start) continue;
      if (!(past.period < obs.period)) break;
      history.push_back({past.period, past.error, past.state});
    }

    Correction c;
    switch (config.kind) {
      case StrategyKind::PassThrough:
        c.pass_through = true;
        c.identifiable = false;
        break;
      case StrategyKind::ME: {
        bool empty_validation = false;
        int w = select_me_window(history, candidates, &empty_validation);
        c = me_correct(history, w);
        c.window = w;
        if (empty_validation) c.flags.push_back("empty_validation");
        break;
      }
      case StrategyKind::AR1:
        c = ar1_correct(history, obs.period);
        break;
      case StrategyKind::SDME:
        c = sd_me_correct(history, obs.state);
        break;
      case StrategyKind::SDAR1:
        c = sd_ar1_correct(history, obs.period, obs.state);
        break;
    }

    OriginRecord rec;
    rec.origin = obs.period;
    rec.raw = obs.forecast;
    rec.correction = c.value;
    rec.corrected = obs.forecast + c.value;
    rec.realized = obs.realized;
    rec.pass_through = c.pass_through;
    rec.chosen_window = c.window;
    rec.flags = c.flags;

    double diff = rec.corrected - rec.realized;
    double bdiff = rec.raw - rec.realized;
    sum_sq += diff * diff;
    baseline_sum_sq += bdiff * bdiff;
    ++count;

    rec.rmsfe = std::sqrt(sum_sq / count);
    rec.baseline_rmsfe = std::sqrt(baseline_sum_sq / count);
    if (rec.baseline_rmsfe > 0.0) {
      rec.rrmsfe = rec.rmsfe / rec.baseline_rmsfe;
    } else {
      rec.rrmsfe = rec.rmsfe == 0.0
                       ? 1.0
                       : std::numeric_limits<double>::infinity();
    }
    report.origins.push_back(std::move(rec));
  }

  if (report.origins.empty()) {
    throw EmptyTestSetError("no test origin has both forecast and realized "
                            "value at horizon " + std::to_string(h.h));
  }
  return report;
}

std::vector<SubperiodRow> subperiod_summary(
    const BacktestReport& report,
    const std::vector<std::pair<HalfYear, HalfYear>>& ranges) {
  std::vector<SubperiodRow> rows;
  for (const auto& [from, to] : ranges) {
    SubperiodRow row;
    row.from = from;
    row.to = to;
    double sum_sq = 0.0;
    double baseline_sum_sq = 0.0;
    for (const auto& rec : report.origins) {
      if (rec.origin < from || to < rec.origin) continue;
      double diff = rec.corrected - rec.realized;
      double bdiff = rec.raw - rec.realized;
      sum_sq += diff * diff;
      baseline_sum_sq += bdiff * bdiff;
      ++row.n;
    }
    if (row.n == 0) {
      throw EmptySubperiodError("no test origins in " + from.str() + ".." +
                                to.str());
    }
    row.rmsfe = std::sqrt(sum_sq / row.n);
    row.baseline_rmsfe = std::sqrt(baseline_sum_sq / row.n);
    if (row.baseline_rmsfe > 0.0) {
      row.rrmsfe = row.rmsfe / row.baseline_rmsfe;
    } else {
      row.rrmsfe = row.rmsfe == 0.0
                       ? 1.0
                       : std::numeric_limits<double>::infinity();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace feval
