#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "divehmm/covariates.hpp"
#include "divehmm/ctmc.hpp"
#include "divehmm/records.hpp"
#include "divehmm/transition_model.hpp"

namespace divehmm {

// Shortest segment that contributes likelihood terms: a 12-observation
// covariate warm-up plus one depth transition.
inline constexpr int kMinSegmentLength = kCovariateHistory + 2;

using StateVector = Eigen::Matrix<double, kNumMovementTypes, 1>;
using StateProbMatrix = Eigen::Matrix<double, kNumMovementTypes, Eigen::Dynamic>;

// One contiguous segment with its covariate design precomputed (data-only;
// reusable across parameter draws).
struct PreparedSegment {
  int first = 0;  // index of the segment's first observation in the record
  std::vector<int> bins;
  std::vector<CelestialLabel> labels;
  Eigen::MatrixXd x_columns;  // 9 x T, column j = x_j (zero before warm-up)

  int length() const { return static_cast<int>(bins.size()); }
  bool contributes() const { return length() >= kMinSegmentLength; }
};

struct PreparedTag {
  std::string tag_id;
  double delta_s = 300.0;
  std::optional<int> exposure_index;  // global observation index
  std::vector<PreparedSegment> segments;

  // Maps a global observation index to (segment, local index); (-1, -1) if
  // the index falls outside every segment.
  std::pair<int, int> locate(int global_index) const;
};

struct PreparedDataset {
  DepthGrid grid;
  double delta_s = 300.0;
  double deep_threshold_m = 800.0;
  double shallow_threshold_m = 200.0;
  std::vector<PreparedTag> tags;  // sorted by tag_id
  int short_segments = 0;         // segments too short to contribute

  int num_tags() const { return static_cast<int>(tags.size()); }
};

PreparedDataset prepare_dataset(const Dataset& dataset);

// Column j of the output is the vector of per-type transition probabilities
// for the observed move bins[j] -> bins[j+1]; filled for j in [12, T-2].
void kernel_prob_columns_into(const PreparedSegment& segment, const KernelSet& kernels,
                              StateProbMatrix& out);

namespace detail {

// Scaled forward pass over one segment.  phi[k] holds, per column j, the
// distribution of s_j given s_{j-1} = k; w holds the per-type depth-move
// probabilities.  The movement type at the step before the first transition
// carries a uniform initial distribution.  Returns -inf when every state
// path has zero probability.
double forward_core(Eigen::Index t_len,
                    const StateProbMatrix* const phi[kNumMovementTypes],
                    const StateProbMatrix& w);

// Filtered distribution of s_j given observations 0..j+1 (the depth move out
// of j is used only when j + 1 < t_visible).
StateVector filter_core(Eigen::Index t_visible, Eigen::Index j,
                        const StateProbMatrix* const phi[kNumMovementTypes],
                        const StateProbMatrix& w);

}  // namespace detail

// Marginal log-likelihood of one segment with movement types integrated out.
// Segments shorter than kMinSegmentLength contribute exactly 0.
double forward_loglik(const PreparedSegment& segment, const KernelSet& kernels,
                      const AnimalCoefficients& B);

// Filtered movement-type distribution at observation j of a segment, using
// only the first `visible_len` observations (-1 = all).  Requires j past the
// covariate warm-up and j < visible_len.
StateVector filtered_state(const PreparedSegment& segment, const KernelSet& kernels,
                           const AnimalCoefficients& B, int j, int visible_len = -1);

double tag_loglik(const PreparedTag& tag, const KernelSet& kernels, const AnimalCoefficients& B);

// Sum over tags (in tag-id order) of their segment log-likelihoods.
double dataset_loglik(const PreparedDataset& dataset, const KernelSet& kernels,
                      const std::vector<AnimalCoefficients>& B_per_tag);

}  // namespace divehmm
