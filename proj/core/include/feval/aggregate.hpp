#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feval/calendar.hpp"
#include "feval/panel.hpp"

namespace feval {

/// Monthly index levels or counts (CPI index points, persons).
class MonthlySeries {
 public:
  void set(YearMonth m, double value) { values_[m] = value; }
  std::optional<double> at(YearMonth m) const;
  const std::map<YearMonth, double>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  /// Sum over the six months of a half-year. Throws MissingMonthsError
  /// listing every absent month.
  double half_year_sum(HalfYear t) const;

  /// Sum over the three months of a quarter. Throws MissingMonthsError.
  double quarter_sum(Quarter q) const;

 private:
  std::map<YearMonth, double> values_;
};

class QuarterlySeries {
 public:
  void set(Quarter q, double value) { values_[q] = value; }
  std::optional<double> at(Quarter q) const;
  const std::map<Quarter, double>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  std::map<Quarter, double> values_;
};

enum class IndexBasis { Headline, Core };

std::string to_string(IndexBasis basis);
IndexBasis basis_from_string(const std::string& s);

/// One inflation-target episode, inclusive month range.
struct TargetEpisode {
  YearMonth from;
  YearMonth to;
  double lower = 0.0;
  double upper = 0.0;
  double midpoint = 0.0;
  IndexBasis basis = IndexBasis::Headline;
};

/// Time-varying inflation target. Episodes are non-overlapping and
/// ordered; midpoint is the value compared against realized inflation.
class TargetSchedule {
 public:
  TargetSchedule() = default;

  /// Validates ordering, non-overlap and lower <= midpoint <= upper.
  explicit TargetSchedule(std::vector<TargetEpisode> episodes);

  std::optional<TargetEpisode> episode_at(YearMonth m) const;

  /// Throws NoTargetEpisodeError when no episode covers the month.
  double midpoint_at(YearMonth m) const;

  const std::vector<TargetEpisode>& episodes() const { return episodes_; }

 private:
  std::vector<TargetEpisode> episodes_;
};

// --- Semiannual constructions from raw levels ------------------------------
//
// All semiannual values are rounded half-away-from-zero to one decimal,
// matching the precision of the published forecasts they are compared to.

/// YoY half-year inflation from the ratio of six-month index sums against
/// the same half one year earlier. Throws MissingMonthsError.
double cpi_inflation_at(const MonthlySeries& cpi, HalfYear t);

/// Unemployment rate as summed unemployed over summed labor force, times
/// 100. Throws MissingMonthsError / NonPositiveLaborError.
double unemployment_at(const MonthlySeries& unemp, const MonthlySeries& labor,
                       HalfYear t);

/// YoY half-year GDP growth from two-quarter sums against the same half
/// one year earlier. Throws MissingQuartersError.
double gdp_growth_at(const QuarterlySeries& gdp, HalfYear t);

/// YoY quarterly inflation from three-month index sums, unrounded
/// (internal input to the state dummy). Throws MissingMonthsError.
double quarterly_inflation_at(const MonthlySeries& cpi, Quarter q);

// Series-level variants: evaluate every period for which the inputs are
// complete and skip the rest.
RealizedSeries semiannual_cpi_inflation(const MonthlySeries& cpi);
RealizedSeries semiannual_unemployment(const MonthlySeries& unemp,
                                       const MonthlySeries& labor);
RealizedSeries semiannual_gdp_growth(const QuarterlySeries& gdp);
QuarterlySeries quarterly_yoy_inflation(const MonthlySeries& cpi);

}  // namespace feval
