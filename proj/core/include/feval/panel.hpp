#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feval/calendar.hpp"

namespace feval {

/// Key of a forecast or error cell: (target period, horizon).
struct PanelKey {
  HalfYear target;
  Horizon h;

  friend constexpr auto operator<=>(const PanelKey& a, const PanelKey& b) {
    if (auto c = a.target <=> b.target; c != 0) return c;
    return a.h <=> b.h;
  }
  friend constexpr bool operator==(const PanelKey& a, const PanelKey& b) {
    return a.target == b.target && a.h == b.h;
  }
};

struct ForecastCell {
  double value = 0.0;  // percent, one published decimal
  YearMonth published;
};

/// Forecasts y_{h,t} for one variable, keyed by (target, horizon).
/// At most one cell per key; duplicates are rejected at insert.
class ForecastPanel {
 public:
  ForecastPanel() = default;
  explicit ForecastPanel(std::string variable)
      : variable_(std::move(variable)) {}

  const std::string& variable() const { return variable_; }

  /// Throws DuplicateCellError if the key is already present.
  void insert(PanelKey key, ForecastCell cell);

  std::optional<ForecastCell> at(PanelKey key) const;
  const std::map<PanelKey, ForecastCell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

 private:
  std::string variable_;
  std::map<PanelKey, ForecastCell> cells_;
};

/// Realized semiannual values y_t, rounded to one decimal before use.
class RealizedSeries {
 public:
  RealizedSeries() = default;
  explicit RealizedSeries(std::string variable)
      : variable_(std::move(variable)) {}

  const std::string& variable() const { return variable_; }

  void set(HalfYear t, double value) { values_[t] = value; }
  std::optional<double> at(HalfYear t) const;
  const std::map<HalfYear, double>& values() const { return values_; }

 private:
  std::string variable_;
  std::map<HalfYear, double> values_;
};

/// Forecast errors e_{h,t} = y_t - y_{h,t}; a cell exists iff both the
/// forecast and the realized value exist. States, when attached, mark
/// whether origin-quarter inflation was at or below the target.
struct ErrorPanel {
  std::map<PanelKey, double> cells;
  std::map<PanelKey, int> states;  // 0/1; may be empty or partial
};

ErrorPanel compute_errors(const ForecastPanel& panel,
                          const RealizedSeries& realized);

/// One aligned observation of a horizon slice, chronological.
struct SliceEntry {
  HalfYear period;
  double error = 0.0;
  std::optional<int> state;
};

/// Present cells of one horizon, in chronological order. Periods with no
/// cell are simply absent from the list.
std::vector<SliceEntry> horizon_slice(const ErrorPanel& errors, Horizon h);

/// Aligned (forecast, realized) observation used by the regression tests.
struct AlignedObs {
  HalfYear period;
  double forecast = 0.0;
  double realized = 0.0;
  double error = 0.0;  // realized - forecast
  std::optional<int> state;
};

/// Chronological slice of fully aligned observations for one horizon.
/// `states` may be null; state stays unset where no dummy is defined.
std::vector<AlignedObs> aligned_slice(const ForecastPanel& panel,
                                      const RealizedSeries& realized,
                                      const std::map<PanelKey, int>* states,
                                      Horizon h);

}  // namespace feval
