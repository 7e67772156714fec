#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <memory>

#include "divehmm/depth_grid.hpp"

namespace divehmm {

// The five movement types, in their conventional order.
enum MovementType : int {
  kSlowDescent = 0,
  kFastDescent = 1,
  kSlowRandomWalk = 2,
  kSlowAscent = 3,
  kFastAscent = 4,
};
inline constexpr int kNumMovementTypes = 5;

const char* movement_type_name(int state);

// Per-type vertical movement law: exponential dwell in bin l with mean
// width(l)/lambda, then a jump to the next deeper bin with probability pi
// (shallower with 1 - pi).  Boundary bins send all jump mass inward.
struct MovementParams {
  double lambda = 1.0;  // vertical speed, m/s
  double pi = 0.5;      // probability the jump goes deeper

  bool operator<(const MovementParams& o) const {
    return lambda != o.lambda ? lambda < o.lambda : pi < o.pi;
  }
  bool operator==(const MovementParams& o) const { return lambda == o.lambda && pi == o.pi; }
};

// The four free movement parameters shared across the five types.  All slow
// types move at lambda_slow, fast types at lambda_fast; both descent types
// share pi_descent and both ascent types share pi_ascent.  pi_ascent is the
// probability of moving *shallower*, so ascent types get a deeper-move
// probability of 1 - pi_ascent; the random-walk type is fixed at 1/2.
struct SharedMovementParams {
  double lambda_slow = 0.45;
  double lambda_fast = 1.31;
  double pi_descent = 0.83;
  double pi_ascent = 0.96;

  void validate() const;  // throws ValidationError
  bool is_valid() const;
};

// Expands the shared parameters into the five per-type parameter pairs.
std::array<MovementParams, kNumMovementTypes> expand_states(const SharedMovementParams& shared);

// Tridiagonal CTMC generator over depth bins: rate(l -> l+1) = pi*lambda/d_l,
// rate(l -> l-1) = (1-pi)*lambda/d_l for interior bins; boundary bins place
// the full rate lambda/d_l on their single inward neighbour.
Eigen::MatrixXd build_rate_matrix(const DepthGrid& grid, const MovementParams& theta);

// exp(delta * A) for a conservative generator A, computed by uniformization
// (Poisson-weighted powers of the embedded DTMC) with per-row truncation mass
// below 1e-13, falling back to repeated squaring when the uniformization rate
// is large.  Output rows are clamped nonnegative and renormalized to sum 1.
// Throws NumericError on non-finite input or output.
Eigen::MatrixXd expm_generator(const Eigen::Ref<const Eigen::MatrixXd>& A, double delta);

// Finite-time depth-bin transition kernel for one movement type.
Eigen::MatrixXd transition_kernel(const Eigen::Ref<const Eigen::MatrixXd>& A, double delta);

// The five per-type kernels for one draw of the shared parameters.  Types
// with identical (lambda, pi) share a single matrix.
class KernelSet {
 public:
  KernelSet() = default;

  const Eigen::MatrixXd& kernel(int state) const { return *kernels_[static_cast<size_t>(state)]; }
  std::shared_ptr<const Eigen::MatrixXd> kernel_ptr(int state) const {
    return kernels_[static_cast<size_t>(state)];
  }

  // Transition probability between 1-based bins under movement type `state`.
  double prob(int state, int from_bin, int to_bin) const {
    return (*kernels_[static_cast<size_t>(state)])(from_bin - 1, to_bin - 1);
  }

 private:
  friend class KernelCache;
  std::array<std::shared_ptr<const Eigen::MatrixXd>, kNumMovementTypes> kernels_;
};

// Memo of transition kernels keyed by the exact (lambda, pi) pair, so repeated
// builds (and types sharing parameters) reuse matrices.  Build once, then read
// from any number of threads; concurrent builds need external synchronization.
class KernelCache {
 public:
  KernelCache(DepthGrid grid, double delta_s) : grid_(std::move(grid)), delta_s_(delta_s) {}

  KernelSet build(const SharedMovementParams& shared);
  std::shared_ptr<const Eigen::MatrixXd> kernel_for(const MovementParams& theta);

  const DepthGrid& grid() const { return grid_; }
  double delta_s() const { return delta_s_; }
  size_t size() const { return cache_.size(); }

 private:
  DepthGrid grid_;
  double delta_s_ = 300.0;
  std::map<MovementParams, std::shared_ptr<const Eigen::MatrixXd>> cache_;
};

}  // namespace divehmm
