#include "feval/panel.hpp"

#include "feval/errors.hpp"

namespace feval {

void ForecastPanel::insert(PanelKey key, ForecastCell cell) {
  auto [it, inserted] = cells_.emplace(key, cell);
  if (!inserted) {
    throw DuplicateCellError("duplicate forecast cell for " + variable_ +
                             " at " + key.target.str() + " h=" +
                             std::to_string(key.h.h));
  }
}

std::optional<ForecastCell> ForecastPanel::at(PanelKey key) const {
  auto it = cells_.find(key);
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> RealizedSeries::at(HalfYear t) const {
  auto it = values_.find(t);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

ErrorPanel compute_errors(const ForecastPanel& panel,
                          const RealizedSeries& realized) {
  if (!panel.variable().empty() && !realized.variable().empty() &&
      panel.variable() != realized.variable()) {
    throw Error("variable mismatch: forecasts for " + panel.variable() +
                " vs realized " + realized.variable());
  }
  ErrorPanel out;
  for (const auto& [key, cell] : panel.cells()) {
    if (auto y = realized.at(key.target)) {
      out.cells[key] = *y - cell.value;
    }
  }
  return out;
}

std::vector<SliceEntry> horizon_slice(const ErrorPanel& errors, Horizon h) {
  std::vector<SliceEntry> out;
  for (const auto& [key, e] : errors.cells) {
    if (key.h != h) continue;
    SliceEntry entry{key.target, e, std::nullopt};
    if (auto it = errors.states.find(key); it != errors.states.end()) {
      entry.state = it->second;
    }
    out.push_back(entry);
  }
  // map iteration is ordered by (target, h), so entries are chronological
  return out;
}

std::vector<AlignedObs> aligned_slice(const ForecastPanel& panel,
                                      const RealizedSeries& realized,
                                      const std::map<PanelKey, int>* states,
                                      Horizon h) {
  std::vector<AlignedObs> out;
  for (const auto& [key, cell] : panel.cells()) {
    if (key.h != h) continue;
    auto y = realized.at(key.target);
    if (!y) continue;
    AlignedObs obs{key.target, cell.value, *y, *y - cell.value, std::nullopt};
    if (states) {
      if (auto it = states->find(key); it != states->end()) {
        obs.state = it->second;
      }
    }
    out.push_back(obs);
  }
  return out;
}

}  // namespace feval
