#include "feval/calendar.hpp"

#include <cmath>

#include "feval/errors.hpp"

namespace feval {

std::string YearMonth::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  return buf;
}

std::string HalfYear::str() const {
  return std::to_string(year) + "H" + std::to_string(half);
}

std::string Quarter::str() const {
  return std::to_string(year) + "Q" + std::to_string(q);
}

Horizon classify_horizon(YearMonth published, HalfYear target) {
  if (!published.valid()) {
    throw OutOfRangeError("invalid publication month " + published.str());
  }
  if (!target.valid()) {
    throw OutOfRangeError("invalid half-year " + target.str());
  }
  int gap_months = month_diff(target.end_month(), published);
  int h = floor_div(gap_months, 3);
  if (h < Horizon::kMin || h > Horizon::kMax) {
    throw OutOfRangeError("horizon " + std::to_string(h) + " for " +
                          published.str() + " -> " + target.str() +
                          " outside [-1, 6]");
  }
  return Horizon{h};
}

double round1(double x) {
  // std::round rounds half away from zero.
  return std::round(x * 10.0) / 10.0;
}

}  // namespace feval
