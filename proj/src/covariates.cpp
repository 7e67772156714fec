#include "divehmm/covariates.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "divehmm/errors.hpp"

namespace divehmm {

int recent_deep_count(std::span<const int> window, const DepthGrid& grid,
                      double deep_threshold_m) {
  if (window.size() != kCovariateHistory) {
    throw ValidationError("recent_deep_count needs exactly 12 bins");
  }
  int count = 0;
  for (const int bin : window) {
    if (grid.midpoint(bin) >= deep_threshold_m) ++count;
  }
  return count;
}

VerticalDistance recent_vertical_distance(std::span<const int> window, const DepthGrid& grid) {
  if (window.size() != kCovariateHistory + 1) {
    throw ValidationError("recent_vertical_distance needs exactly 13 bins");
  }
  double meters = 0.0;
  for (size_t i = 1; i < window.size(); ++i) {
    meters += std::abs(grid.midpoint(window[i]) - grid.midpoint(window[i - 1]));
  }
  return {meters, (meters - kVerticalDistCenter) / kVerticalDistScale};
}

CovariateVector covariates_from_window(std::span<const int> window13, CelestialLabel label,
                                       const DepthGrid& grid, double deep_threshold_m) {
  const double c1 = recent_deep_count(window13.subspan(1), grid, deep_threshold_m);
  const double z2 = recent_vertical_distance(window13, grid).standardized;

  CovariateVector x;
  x(kIntercept) = 1.0;
  x(kDayIndicator) = label == CelestialLabel::kDaytime ? 1.0 : 0.0;
  x(kMoonlitIndicator) = label == CelestialLabel::kMoonlitNight ? 1.0 : 0.0;
  x(kDeepCount) = c1;
  x(kDeepCountSq) = c1 * c1;
  x(kDeepCountCu) = c1 * c1 * c1;
  x(kVerticalDist) = z2;
  x(kVerticalDistSq) = z2 * z2;
  x(kVerticalDistCu) = z2 * z2 * z2;
  return x;
}

CovariateVector build_covariates(const TagRecord& record, const DepthGrid& grid, int j,
                                 double deep_threshold_m) {
  if (j < kCovariateHistory || j >= record.size()) {
    throw ValidationError("covariates at observation " + std::to_string(j) +
                          " need 12 prior observations");
  }
  std::vector<int> window(static_cast<size_t>(kCovariateHistory) + 1);
  for (int k = 0; k <= kCovariateHistory; ++k) {
    window[static_cast<size_t>(k)] =
        record.observations[static_cast<size_t>(j - kCovariateHistory + k)].bin;
  }
  return covariates_from_window(window, record.observations[static_cast<size_t>(j)].celestial,
                                grid, deep_threshold_m);
}

Eigen::MatrixXd covariate_columns(std::span<const int> bins, std::span<const CelestialLabel> labels,
                                  const DepthGrid& grid, double deep_threshold_m) {
  if (bins.size() != labels.size()) throw ValidationError("bins/labels length mismatch");
  const auto t_len = static_cast<Eigen::Index>(bins.size());
  Eigen::MatrixXd columns = Eigen::MatrixXd::Zero(kNumCovariates, t_len);
  for (Eigen::Index j = kCovariateHistory; j < t_len; ++j) {
    columns.col(j) = covariates_from_window(
        bins.subspan(static_cast<size_t>(j - kCovariateHistory), kCovariateHistory + 1),
        labels[static_cast<size_t>(j)], grid, deep_threshold_m);
  }
  return columns;
}

}  // namespace divehmm
