#pragma once

#include <vector>

namespace divehmm {

// Partition of the water column into M half-open depth bins [D_{l-1}, D_l),
// built from breakpoints 0 = D_0 < D_1 < ... < D_M.  Bin indices are 1-based
// throughout the library, matching the on-disk record format.
class DepthGrid {
 public:
  explicit DepthGrid(std::vector<double> breakpoints_m);

  int num_bins() const { return static_cast<int>(widths_.size()); }
  double max_depth() const { return breakpoints_.back(); }

  double width(int bin) const { return widths_[static_cast<size_t>(bin - 1)]; }
  double midpoint(int bin) const { return midpoints_[static_cast<size_t>(bin - 1)]; }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& widths() const { return widths_; }
  const std::vector<double>& midpoints() const { return midpoints_; }

  // Bin containing `depth_m`; depth == max_depth() maps to bin M.
  // Throws ValidationError for depths outside [0, D_M].
  int bin_of_depth(double depth_m) const;

  bool contains_bin(int bin) const { return bin >= 1 && bin <= num_bins(); }

  bool operator==(const DepthGrid& other) const { return breakpoints_ == other.breakpoints_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> widths_;
  std::vector<double> midpoints_;
};

}  // namespace divehmm
