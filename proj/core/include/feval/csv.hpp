#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "feval/aggregate.hpp"
#include "feval/panel.hpp"

namespace feval {

// CSV schemas (header row required, decimal-point numbers, blank value =
// missing observation):
//
//   forecasts.csv: variable,publication_year,publication_month,
//                  target_year,target_half,value
//   monthly.csv:   series,year,month,value
//   quarterly.csv: series,year,quarter,value
//   targets.csv:   from_year,from_month,to_year,to_month,
//                  lower,upper,midpoint,basis
//
// Horizons are always derived from publication and target dates via
// classify_horizon, never read from the file.

std::map<std::string, ForecastPanel> parse_forecast_csv(std::istream& in);
std::map<std::string, MonthlySeries> parse_monthly_csv(std::istream& in);
std::map<std::string, QuarterlySeries> parse_quarterly_csv(std::istream& in);
TargetSchedule parse_target_schedule(std::istream& in);

void write_forecast_csv(std::ostream& out,
                        const std::map<std::string, ForecastPanel>& panels);

// Convenience file wrappers; throw Error when the file cannot be opened.
std::map<std::string, ForecastPanel> load_forecast_csv(
    const std::string& path);
std::map<std::string, MonthlySeries> load_monthly_csv(const std::string& path);
std::map<std::string, QuarterlySeries> load_quarterly_csv(
    const std::string& path);
TargetSchedule load_target_schedule(const std::string& path);

}  // namespace feval
