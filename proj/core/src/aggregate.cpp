#include "feval/aggregate.hpp"

#include <algorithm>

#include "feval/errors.hpp"

namespace feval {

namespace {

std::string join_missing(const std::vector<YearMonth>& missing) {
  std::string s;
  for (const auto& m : missing) {
    if (!s.empty()) s += ", ";
    s += m.str();
  }
  return s;
}

}  // namespace

std::optional<double> MonthlySeries::at(YearMonth m) const {
  auto it = values_.find(m);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double MonthlySeries::half_year_sum(HalfYear t) const {
  double sum = 0.0;
  std::vector<YearMonth> missing;
  YearMonth first = t.first_month();
  for (int i = 0; i < 6; ++i) {
    YearMonth m = YearMonth::from_index(first.index() + i);
    if (auto v = at(m)) {
      sum += *v;
    } else {
      missing.push_back(m);
    }
  }
  if (!missing.empty()) {
    throw MissingMonthsError("missing months for " + t.str() + ": " +
                             join_missing(missing));
  }
  return sum;
}

double MonthlySeries::quarter_sum(Quarter q) const {
  double sum = 0.0;
  std::vector<YearMonth> missing;
  int first = YearMonth{q.year, q.q * 3 - 2}.index();
  for (int i = 0; i < 3; ++i) {
    YearMonth m = YearMonth::from_index(first + i);
    if (auto v = at(m)) {
      sum += *v;
    } else {
      missing.push_back(m);
    }
  }
  if (!missing.empty()) {
    throw MissingMonthsError("missing months for " + q.str() + ": " +
                             join_missing(missing));
  }
  return sum;
}

std::optional<double> QuarterlySeries::at(Quarter q) const {
  auto it = values_.find(q);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string to_string(IndexBasis basis) {
  return basis == IndexBasis::Headline ? "headline" : "core";
}

IndexBasis basis_from_string(const std::string& s) {
  if (s == "headline") return IndexBasis::Headline;
  if (s == "core") return IndexBasis::Core;
  throw Error("unknown index basis: " + s);
}

TargetSchedule::TargetSchedule(std::vector<TargetEpisode> episodes)
    : episodes_(std::move(episodes)) {
  std::sort(episodes_.begin(), episodes_.end(),
            [](const TargetEpisode& a, const TargetEpisode& b) {
              return a.from < b.from;
            });
  for (std::size_t i = 0; i < episodes_.size(); ++i) {
    const auto& ep = episodes_[i];
    if (ep.to < ep.from) {
      throw Error("target episode ends before it starts: " + ep.from.str() +
                  ".." + ep.to.str());
    }
    if (!(ep.lower <= ep.midpoint && ep.midpoint <= ep.upper)) {
      throw Error("target episode " + ep.from.str() +
                  " violates lower <= midpoint <= upper");
    }
    if (i > 0 && !(episodes_[i - 1].to < ep.from)) {
      throw Error("target episodes overlap at " + ep.from.str());
    }
  }
}

std::optional<TargetEpisode> TargetSchedule::episode_at(YearMonth m) const {
  for (const auto& ep : episodes_) {
    if (ep.from <= m && m <= ep.to) return ep;
  }
  return std::nullopt;
}

double TargetSchedule::midpoint_at(YearMonth m) const {
  if (auto ep = episode_at(m)) return ep->midpoint;
  throw NoTargetEpisodeError("no target episode covers " + m.str());
}

double cpi_inflation_at(const MonthlySeries& cpi, HalfYear t) {
  double cur = cpi.half_year_sum(t);
  double prev = cpi.half_year_sum(t.plus(-2));
  return round1((cur / prev - 1.0) * 100.0);
}

double unemployment_at(const MonthlySeries& unemp, const MonthlySeries& labor,
                       HalfYear t) {
  double u = unemp.half_year_sum(t);
  double l = labor.half_year_sum(t);
  if (l <= 0.0) {
    throw NonPositiveLaborError("non-positive labor force sum for " + t.str());
  }
  return round1(u / l * 100.0);
}

double gdp_growth_at(const QuarterlySeries& gdp, HalfYear t) {
  Quarter a{t.year, t.half == 1 ? 1 : 3};
  Quarter b{t.year, t.half == 1 ? 2 : 4};
  std::string missing;
  auto get = [&](Quarter q) -> double {
    if (auto v = gdp.at(q)) return *v;
    if (!missing.empty()) missing += ", ";
    missing += q.str();
    return 0.0;
  };
  double cur = get(a) + get(b);
  double prev = get(a.plus(-4)) + get(b.plus(-4));
  if (!missing.empty()) {
    throw MissingQuartersError("missing quarters for " + t.str() + ": " +
                               missing);
  }
  return round1((cur / prev - 1.0) * 100.0);
}

double quarterly_inflation_at(const MonthlySeries& cpi, Quarter q) {
  double cur = cpi.quarter_sum(q);
  double prev = cpi.quarter_sum(q.plus(-4));
  return (cur / prev - 1.0) * 100.0;
}

namespace {

// Half-year range spanned by a monthly or quarterly map's keys.
template <typename Map>
std::pair<int, int> half_year_span(const Map& values) {
  int lo = values.begin()->first.index();
  int hi = values.rbegin()->first.index();
  return {lo, hi};
}

}  // namespace

RealizedSeries semiannual_cpi_inflation(const MonthlySeries& cpi) {
  RealizedSeries out;
  if (cpi.empty()) return out;
  auto [lo, hi] = half_year_span(cpi.values());
  HalfYear first = HalfYear{YearMonth::from_index(lo).year, 1};
  HalfYear last = HalfYear{YearMonth::from_index(hi).year, 2};
  for (int o = first.ordinal(); o <= last.ordinal(); ++o) {
    HalfYear t = HalfYear::from_ordinal(o);
    try {
      out.set(t, cpi_inflation_at(cpi, t));
    } catch (const MissingMonthsError&) {
    }
  }
  return out;
}

RealizedSeries semiannual_unemployment(const MonthlySeries& unemp,
                                       const MonthlySeries& labor) {
  RealizedSeries out;
  if (unemp.empty() || labor.empty()) return out;
  auto [lo, hi] = half_year_span(unemp.values());
  HalfYear first = HalfYear{YearMonth::from_index(lo).year, 1};
  HalfYear last = HalfYear{YearMonth::from_index(hi).year, 2};
  for (int o = first.ordinal(); o <= last.ordinal(); ++o) {
    HalfYear t = HalfYear::from_ordinal(o);
    try {
      out.set(t, unemployment_at(unemp, labor, t));
    } catch (const MissingMonthsError&) {
    }
  }
  return out;
}

RealizedSeries semiannual_gdp_growth(const QuarterlySeries& gdp) {
  RealizedSeries out;
  if (gdp.empty()) return out;
  int lo = gdp.values().begin()->first.year;
  int hi = gdp.values().rbegin()->first.year;
  for (int year = lo; year <= hi; ++year) {
    for (int half = 1; half <= 2; ++half) {
      HalfYear t{year, half};
      try {
        out.set(t, gdp_growth_at(gdp, t));
      } catch (const MissingQuartersError&) {
      }
    }
  }
  return out;
}

QuarterlySeries quarterly_yoy_inflation(const MonthlySeries& cpi) {
  QuarterlySeries out;
  if (cpi.empty()) return out;
  int lo = floor_div(cpi.values().begin()->first.index(), 3);
  int hi = floor_div(cpi.values().rbegin()->first.index(), 3);
  for (int qi = lo; qi <= hi; ++qi) {
    Quarter q = Quarter::from_index(qi);
    try {
      out.set(q, quarterly_inflation_at(cpi, q));
    } catch (const MissingMonthsError&) {
    }
  }
  return out;
}

}  // namespace feval
