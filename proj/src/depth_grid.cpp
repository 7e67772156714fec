#include "divehmm/depth_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "divehmm/errors.hpp"

namespace divehmm {

DepthGrid::DepthGrid(std::vector<double> breakpoints_m) : breakpoints_(std::move(breakpoints_m)) {
  if (breakpoints_.size() < 3) {
    throw ValidationError("depth grid needs at least 2 bins (3 breakpoints)");
  }
  if (breakpoints_.front() != 0.0) {
    throw ValidationError("first breakpoint must be 0 (ocean surface)");
  }
  for (size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1]) || !std::isfinite(breakpoints_[i + 1])) {
      throw ValidationError("breakpoints must be finite and strictly increasing");
    }
  }
  widths_.reserve(breakpoints_.size() - 1);
  midpoints_.reserve(breakpoints_.size() - 1);
  for (size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    widths_.push_back(breakpoints_[i + 1] - breakpoints_[i]);
    midpoints_.push_back(0.5 * (breakpoints_[i] + breakpoints_[i + 1]));
  }
}

int DepthGrid::bin_of_depth(double depth_m) const {
  if (!(depth_m >= 0.0) || depth_m > max_depth()) {
    throw ValidationError("depth " + std::to_string(depth_m) + " outside grid [0, " +
                          std::to_string(max_depth()) + "]");
  }
  if (depth_m == max_depth()) return num_bins();
  // Bin l covers [D_{l-1}, D_l).
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), depth_m);
  return static_cast<int>(it - breakpoints_.begin());
}

}  // namespace divehmm
