#pragma once

#include <compare>
#include <string>

namespace feval {

/// Floor division (rounds toward negative infinity).
constexpr int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Calendar month, month in 1..12.
struct YearMonth {
  int year = 0;
  int month = 1;

  /// Months since January of year 0; month differences are exact integers.
  constexpr int index() const { return year * 12 + (month - 1); }

  static constexpr YearMonth from_index(int idx) {
    int y = floor_div(idx, 12);
    return YearMonth{y, idx - y * 12 + 1};
  }

  constexpr bool valid() const { return month >= 1 && month <= 12; }

  friend constexpr auto operator<=>(YearMonth a, YearMonth b) {
    return a.index() <=> b.index();
  }
  friend constexpr bool operator==(YearMonth a, YearMonth b) {
    return a.index() == b.index();
  }

  std::string str() const;
};

constexpr int month_diff(YearMonth a, YearMonth b) {
  return a.index() - b.index();
}

/// Semiannual period, half in {1, 2}. H1 covers Jan-Jun, H2 Jul-Dec.
struct HalfYear {
  int year = 0;
  int half = 1;

  /// Half-years since H1 of year 0; supports ordinal arithmetic t +- k.
  constexpr int ordinal() const { return year * 2 + (half - 1); }

  static constexpr HalfYear from_ordinal(int ord) {
    int y = floor_div(ord, 2);
    return HalfYear{y, ord - y * 2 + 1};
  }

  constexpr HalfYear plus(int k) const { return from_ordinal(ordinal() + k); }

  constexpr bool valid() const { return half == 1 || half == 2; }

  /// Final month of the half-year: June or December.
  constexpr YearMonth end_month() const {
    return YearMonth{year, half == 1 ? 6 : 12};
  }

  constexpr YearMonth first_month() const {
    return YearMonth{year, half == 1 ? 1 : 7};
  }

  friend constexpr auto operator<=>(HalfYear a, HalfYear b) {
    return a.ordinal() <=> b.ordinal();
  }
  friend constexpr bool operator==(HalfYear a, HalfYear b) {
    return a.ordinal() == b.ordinal();
  }

  std::string str() const;  // e.g. "2021H1"
};

/// Calendar quarter, q in 1..4.
struct Quarter {
  int year = 0;
  int q = 1;

  constexpr int index() const { return year * 4 + (q - 1); }

  static constexpr Quarter from_index(int idx) {
    int y = floor_div(idx, 4);
    return Quarter{y, idx - y * 4 + 1};
  }

  constexpr Quarter plus(int k) const { return from_index(index() + k); }

  constexpr bool valid() const { return q >= 1 && q <= 4; }

  /// Middle month of the quarter (Feb, May, Aug, Nov).
  constexpr YearMonth mid_month() const { return YearMonth{year, q * 3 - 1}; }

  friend constexpr auto operator<=>(Quarter a, Quarter b) {
    return a.index() <=> b.index();
  }
  friend constexpr bool operator==(Quarter a, Quarter b) {
    return a.index() == b.index();
  }

  std::string str() const;  // e.g. "2021Q2"
};

/// Final quarter of a half-year: Q2 for H1, Q4 for H2.
constexpr Quarter end_quarter(HalfYear t) {
  return Quarter{t.year, t.half == 1 ? 2 : 4};
}

/// Forecast horizon in quarters. 0 is a nowcast, -1 a backcast published
/// after the target period ends but before the realized value is released.
struct Horizon {
  int h = 0;

  static constexpr int kMin = -1;
  static constexpr int kMax = 6;

  constexpr bool valid() const { return h >= kMin && h <= kMax; }

  friend constexpr auto operator<=>(Horizon a, Horizon b) = default;
};

/// Number of quarters between publication and the end of the target
/// half-year, floored: less than three months ahead classifies as 0,
/// publication after the target end as -1.
/// Throws OutOfRangeError if the result is outside [-1, 6].
Horizon classify_horizon(YearMonth published, HalfYear target);

/// Quarter whose realized inflation defines the state of a forecast:
/// h quarters before the end quarter of the target half-year.
constexpr Quarter origin_quarter(HalfYear target, Horizon h) {
  return end_quarter(target).plus(-h.h);
}

/// Round half away from zero to one decimal place, the precision of
/// published figures.
double round1(double x);

}  // namespace feval
