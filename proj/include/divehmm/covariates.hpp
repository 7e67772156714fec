#pragma once

#include <Eigen/Dense>
#include <span>

#include "divehmm/records.hpp"

namespace divehmm {

// Layout of the state-transition design vector x_j.
enum CovariateIndex : int {
  kIntercept = 0,
  kDayIndicator = 1,
  kMoonlitIndicator = 2,
  kDeepCount = 3,
  kDeepCountSq = 4,
  kDeepCountCu = 5,
  kVerticalDist = 6,
  kVerticalDistSq = 7,
  kVerticalDistCu = 8,
};
inline constexpr int kNumCovariates = 9;

// Number of earlier in-segment observations a covariate vector needs: the
// recent-activity window spans the current observation plus the previous 12.
inline constexpr int kCovariateHistory = 12;

// Standardization of the recent vertical distance covariate.
inline constexpr double kVerticalDistCenter = 1650.0;
inline constexpr double kVerticalDistScale = 500.0;

using CovariateVector = Eigen::Matrix<double, kNumCovariates, 1>;

// Count of bins in the 12-observation window whose midpoint is at or beyond
// the deep threshold.  `window` holds exactly 12 bins, oldest first.
int recent_deep_count(std::span<const int> window, const DepthGrid& grid, double deep_threshold_m);

// Total vertical distance between consecutive bin midpoints over the last 12
// transitions (`window` holds exactly 13 bins, oldest first), plus its
// standardized value z = (c2 - 1650) / 500.
struct VerticalDistance {
  double meters = 0.0;
  double standardized = 0.0;
};
VerticalDistance recent_vertical_distance(std::span<const int> window, const DepthGrid& grid);

// Design vector from a 13-bin window ending at the current observation and
// the current celestial label.  Dark night is the reference celestial level.
CovariateVector covariates_from_window(std::span<const int> window13, CelestialLabel label,
                                       const DepthGrid& grid, double deep_threshold_m);

// Design vector at observation j of a record; requires 12 prior observations.
// Throws ValidationError when the history is insufficient.
CovariateVector build_covariates(const TagRecord& record, const DepthGrid& grid, int j,
                                 double deep_threshold_m);

// All design vectors of a bin sequence as a 9 x T matrix (column j is x_j;
// columns before the warm-up are zero).  Labels run parallel to bins.
Eigen::MatrixXd covariate_columns(std::span<const int> bins, std::span<const CelestialLabel> labels,
                                  const DepthGrid& grid, double deep_threshold_m);

}  // namespace divehmm
