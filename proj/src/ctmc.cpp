#include "divehmm/ctmc.hpp"

#include <cmath>
#include <string>

#include "divehmm/errors.hpp"

namespace divehmm {

namespace {

// Keep the uniformization rate per piece modest so the Poisson series stays
// short and its weights well inside double range.
constexpr double kMaxPieceRate = 48.0;
constexpr double kSeriesTailMass = 1e-13;
constexpr size_t kCacheLimit = 256;

Eigen::MatrixXd uniformized_series(const Eigen::MatrixXd& A, double tau, double eta) {
  const auto m = A.rows();
  const double mu = eta * tau;
  // Embedded DTMC of the uniformized chain.
  Eigen::MatrixXd dtmc = Eigen::MatrixXd::Identity(m, m) + A * (tau / mu);

  Eigen::MatrixXd result = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(m, m);
  double weight = std::exp(-mu);
  double cumulative = weight;
  result += weight * term;
  const int max_terms = static_cast<int>(mu + 10.0 * std::sqrt(mu) + 24.0);
  for (int n = 1; n <= max_terms; ++n) {
    term = term * dtmc;
    weight *= mu / n;
    result.noalias() += weight * term;
    cumulative += weight;
    if (n >= mu && 1.0 - cumulative <= kSeriesTailMass) break;
  }
  return result;
}

void clamp_and_renormalize(Eigen::MatrixXd& P) {
  P = P.cwiseMax(0.0);
  const Eigen::VectorXd row_sums = P.rowwise().sum();
  P.array().colwise() /= row_sums.array();
}

}  // namespace

const char* movement_type_name(int state) {
  switch (state) {
    case kSlowDescent:
      return "slow_descent";
    case kFastDescent:
      return "fast_descent";
    case kSlowRandomWalk:
      return "slow_random_walk";
    case kSlowAscent:
      return "slow_ascent";
    case kFastAscent:
      return "fast_ascent";
  }
  return "?";
}

void SharedMovementParams::validate() const {
  if (!is_valid()) {
    throw ValidationError("shared movement params need 0 < lambda_slow < lambda_fast and "
                          "direction probabilities in (0.5, 1)");
  }
}

bool SharedMovementParams::is_valid() const {
  return std::isfinite(lambda_slow) && std::isfinite(lambda_fast) && lambda_slow > 0.0 &&
         lambda_slow < lambda_fast && pi_descent > 0.5 && pi_descent < 1.0 && pi_ascent > 0.5 &&
         pi_ascent < 1.0;
}

std::array<MovementParams, kNumMovementTypes> expand_states(const SharedMovementParams& shared) {
  return {{
      {shared.lambda_slow, shared.pi_descent},       // slow descent
      {shared.lambda_fast, shared.pi_descent},       // fast descent
      {shared.lambda_slow, 0.5},                     // slow random walk
      {shared.lambda_slow, 1.0 - shared.pi_ascent},  // slow ascent
      {shared.lambda_fast, 1.0 - shared.pi_ascent},  // fast ascent
  }};
}

Eigen::MatrixXd build_rate_matrix(const DepthGrid& grid, const MovementParams& theta) {
  const int m = grid.num_bins();
  Eigen::MatrixXd rates = Eigen::MatrixXd::Zero(m, m);
  for (int l = 1; l <= m; ++l) {
    const double exit_rate = theta.lambda / grid.width(l);
    const int row = l - 1;
    if (l == 1) {
      rates(row, row + 1) = exit_rate;
    } else if (l == m) {
      rates(row, row - 1) = exit_rate;
    } else {
      rates(row, row + 1) = exit_rate * theta.pi;
      rates(row, row - 1) = exit_rate * (1.0 - theta.pi);
    }
    rates(row, row) = -exit_rate;
  }
  return rates;
}

Eigen::MatrixXd expm_generator(const Eigen::Ref<const Eigen::MatrixXd>& A, double delta) {
  const auto m = A.rows();
  if (delta < 0.0 || !std::isfinite(delta)) throw NumericError("expm: delta must be finite, >= 0");
  if (!A.allFinite()) throw NumericError("expm: generator has non-finite entries");

  const double eta = -A.diagonal().minCoeff();
  if (delta == 0.0 || eta == 0.0) return Eigen::MatrixXd::Identity(m, m);

  int squarings = 0;
  double tau = delta;
  while (eta * tau > kMaxPieceRate) {
    tau *= 0.5;
    ++squarings;
  }

  Eigen::MatrixXd P = uniformized_series(A, tau, eta);
  clamp_and_renormalize(P);
  for (int s = 0; s < squarings; ++s) P = P * P;
  clamp_and_renormalize(P);

  if (!P.allFinite()) throw NumericError("expm: non-finite kernel (pathological rate scale)");
  return P;
}

Eigen::MatrixXd transition_kernel(const Eigen::Ref<const Eigen::MatrixXd>& A, double delta) {
  return expm_generator(A, delta);
}

std::shared_ptr<const Eigen::MatrixXd> KernelCache::kernel_for(const MovementParams& theta) {
  auto it = cache_.find(theta);
  if (it != cache_.end()) return it->second;
  if (cache_.size() >= kCacheLimit) cache_.clear();
  auto kernel = std::make_shared<Eigen::MatrixXd>(
      transition_kernel(build_rate_matrix(grid_, theta), delta_s_));
  cache_.emplace(theta, kernel);
  return kernel;
}

KernelSet KernelCache::build(const SharedMovementParams& shared) {
  shared.validate();
  const auto thetas = expand_states(shared);
  KernelSet set;
  for (int k = 0; k < kNumMovementTypes; ++k) {
    set.kernels_[static_cast<size_t>(k)] = kernel_for(thetas[static_cast<size_t>(k)]);
  }
  return set;
}

}  // namespace divehmm
