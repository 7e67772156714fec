#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divehmm/depth_grid.hpp"

namespace divehmm {

enum class CelestialLabel { kDaytime, kDarkNight, kMoonlitNight };

const char* to_string(CelestialLabel label);

struct Observation {
  double time_s = 0.0;
  int bin = 1;  // 1..M
  CelestialLabel celestial = CelestialLabel::kDaytime;
};

// One contiguous run of observations sampled exactly delta seconds apart,
// given as [first, first + count) indices into TagRecord::observations.
struct Segment {
  int first = 0;
  int count = 0;
};

// One animal's depth-bin time series.  `exposure_index`, when present, is the
// index of the first observation recorded at or after sound exposure; the last
// pre-exposure observation is therefore exposure_index - 1.
struct TagRecord {
  std::string tag_id;
  double delta_s = 300.0;
  std::vector<Observation> observations;
  std::optional<int> exposure_index;

  int size() const { return static_cast<int>(observations.size()); }

  // Checks bin ranges, strictly increasing times, and exposure index validity.
  void validate(const DepthGrid& grid) const;
};

// Splits a record at every pair of consecutive observations whose time gap is
// not exactly delta.  Segments are ordered and their union is the record.
std::vector<Segment> segment_record(const TagRecord& record);

struct Dataset {
  DepthGrid grid;
  std::vector<TagRecord> tags;
  double deep_threshold_m = 800.0;
  double shallow_threshold_m = 200.0;

  void validate() const;
};

}  // namespace divehmm
