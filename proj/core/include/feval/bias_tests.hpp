#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feval/aggregate.hpp"
#include "feval/panel.hpp"
#include "feval/regression.hpp"

namespace feval {

/// d_{h,t} = 1 when origin-quarter YoY inflation is at or below the
/// scheduled target midpoint (ties count as below).
struct StateDummy {
  std::map<PanelKey, int> d;
};

/// Builds the state dummy for the given panel coordinates. The origin
/// quarter is the end quarter of the target half-year minus h quarters;
/// the target in effect is looked up at that quarter's mid-month.
/// Coordinates with no computable origin inflation or no covering target
/// episode are skipped.
StateDummy make_state_dummy(const QuarterlySeries& quarterly_inflation,
                            const TargetSchedule& targets,
                            const std::vector<PanelKey>& coordinates);

/// Strict variant for a single coordinate; throws
/// MissingOriginInflationError / NoTargetEpisodeError.
int state_at(const QuarterlySeries& quarterly_inflation,
             const TargetSchedule& targets, PanelKey key);

struct CoefEstimate {
  std::string name;
  std::optional<double> value;  // absent when the regime is unidentified
  std::optional<double> se;
};

/// Result of one unbiasedness test on one horizon slice.
struct TestReport {
  std::string test_name;
  int horizon = 0;
  int n = 0;
  std::vector<CoefEstimate> coefficients;
  std::optional<HypothesisReport> joint;
  struct NamedTest {
    std::string name;  // coefficient the one-sided test refers to
    HypothesisReport report;
  };
  std::vector<NamedTest> one_sided;
  std::vector<std::string> flags;

  const CoefEstimate* coefficient(const std::string& name) const;
};

/// Intercept-only regression of forecast errors; reports the two-sided
/// HAC t test of a zero mean plus both one-sided p-values.
/// Throws TooFewObservationsError below 3 observations.
TestReport holden_peel(const std::vector<AlignedObs>& slice,
                       std::optional<int> bandwidth = std::nullopt);

/// Realized on intercept + forecast; joint Wald of (intercept 0, slope 1).
/// Throws TooFewObservationsError / ConstantRegressorError.
TestReport mincer_zarnowitz(const std::vector<AlignedObs>& slice,
                            std::optional<int> bandwidth = std::nullopt);

/// Errors on the state dummy and its complement (no global intercept).
/// Joint Wald that both state means are zero; one-sided t tests with
/// alternatives alpha < 0 (below-target state) and delta > 0.
/// Observations without a state are dropped; an unpopulated state leaves
/// its coefficient unidentified and is flagged.
TestReport sd_holden_peel(const std::vector<AlignedObs>& slice,
                          std::optional<int> bandwidth = std::nullopt);

/// Fully interacted Mincer-Zarnowitz regression across the two states;
/// joint Wald with 4 restrictions. Throws RegimeTooSmallError when a
/// regime has fewer than 3 observations or constant forecasts.
TestReport sd_mincer_zarnowitz(const std::vector<AlignedObs>& slice,
                               std::optional<int> bandwidth = std::nullopt);

/// Plain Mincer-Zarnowitz on the subsample in the given state.
TestReport subsample_mz(const std::vector<AlignedObs>& slice, int which_state,
                        std::optional<int> bandwidth = std::nullopt);

}  // namespace feval
