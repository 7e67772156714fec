#include "divehmm/records.hpp"

#include <cmath>
#include <string>

#include "divehmm/errors.hpp"

namespace divehmm {

namespace {
constexpr double kTimeTolerance = 1e-6;  // seconds; times come from text
}

const char* to_string(CelestialLabel label) {
  switch (label) {
    case CelestialLabel::kDaytime:
      return "day";
    case CelestialLabel::kDarkNight:
      return "dark";
    case CelestialLabel::kMoonlitNight:
      return "moonlit";
  }
  return "?";
}

void TagRecord::validate(const DepthGrid& grid) const {
  if (!(delta_s > 0.0) || !std::isfinite(delta_s)) {
    throw ValidationError("tag " + tag_id + ": sampling interval must be positive");
  }
  for (size_t j = 0; j < observations.size(); ++j) {
    if (!grid.contains_bin(observations[j].bin)) {
      throw ValidationError("tag " + tag_id + ": observation " + std::to_string(j) +
                            " has bin " + std::to_string(observations[j].bin) +
                            " outside 1.." + std::to_string(grid.num_bins()));
    }
    if (j > 0 && !(observations[j].time_s > observations[j - 1].time_s)) {
      throw ValidationError("tag " + tag_id + ": non-monotone times at observation " +
                            std::to_string(j));
    }
  }
  if (exposure_index) {
    if (*exposure_index < 0 || *exposure_index >= size()) {
      throw ValidationError("tag " + tag_id + ": exposure index out of range");
    }
  }
}

std::vector<Segment> segment_record(const TagRecord& record) {
  std::vector<Segment> segments;
  const auto& obs = record.observations;
  if (obs.empty()) return segments;
  Segment current{0, 1};
  for (size_t j = 1; j < obs.size(); ++j) {
    const double dt = obs[j].time_s - obs[j - 1].time_s;
    if (std::abs(dt - record.delta_s) <= kTimeTolerance) {
      ++current.count;
    } else {
      segments.push_back(current);
      current = Segment{static_cast<int>(j), 1};
    }
  }
  segments.push_back(current);
  return segments;
}

void Dataset::validate() const {
  if (!(shallow_threshold_m > 0.0) || !(shallow_threshold_m < deep_threshold_m) ||
      !(deep_threshold_m <= grid.max_depth())) {
    throw ValidationError("thresholds must satisfy 0 < shallow < deep <= max depth");
  }
  for (const auto& tag : tags) tag.validate(grid);
}

}  // namespace divehmm
