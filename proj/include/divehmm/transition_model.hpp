#pragma once

#include <Eigen/Dense>
#include <array>

#include "divehmm/covariates.hpp"
#include "divehmm/ctmc.hpp"

namespace divehmm {

// Coefficients for one animal and one from-type: column l holds the effect
// vector for switching to type l.  The last column is pinned to zero so the
// softmax is identified (fast ascent is the reference type).
using CoefficientMatrix = Eigen::Matrix<double, kNumCovariates, kNumMovementTypes>;

inline constexpr int kFreeTypes = kNumMovementTypes - 1;

// Full transition parameterization for one animal: B[k] governs switches out
// of movement type k.  Row 0 of each B[k] is the animal-specific intercept;
// the remaining rows are shared across animals.
using AnimalCoefficients = std::array<CoefficientMatrix, kNumMovementTypes>;

AnimalCoefficients zero_coefficients();

// Probabilities are floored here before normalization so downstream logs of
// any transition probability stay finite.
inline constexpr double kProbFloor = 1e-300;

// Log-odds of switching to each type versus staying, entry l = x . B.col(l);
// the reference entry is exactly zero.
template <typename XDerived, typename BDerived>
Eigen::Matrix<double, kNumMovementTypes, 1> log_ratios(const Eigen::MatrixBase<XDerived>& x,
                                                       const Eigen::MatrixBase<BDerived>& B) {
  Eigen::Matrix<double, kNumMovementTypes, 1> ratios = B.transpose() * x;
  ratios(kNumMovementTypes - 1) = 0.0;
  return ratios;
}

// Softmax of the log-ratios, computed with a max shift.
template <typename XDerived, typename BDerived>
Eigen::Matrix<double, kNumMovementTypes, 1> transition_row(const Eigen::MatrixBase<XDerived>& x,
                                                           const Eigen::MatrixBase<BDerived>& B) {
  Eigen::Matrix<double, kNumMovementTypes, 1> r = log_ratios(x, B);
  const double shift = r.maxCoeff();
  Eigen::Matrix<double, kNumMovementTypes, 1> p =
      (r.array() - shift).exp().max(kProbFloor).matrix();
  return p / p.sum();
}

// Columnwise softmax of a 4 x T log-odds block (reference row appended as 0),
// floored and normalized as above.
void softmax_columns_into(
    const Eigen::Ref<const Eigen::Matrix<double, kFreeTypes, Eigen::Dynamic>>& log_odds,
    Eigen::Ref<Eigen::Matrix<double, kNumMovementTypes, Eigen::Dynamic>> out);

// Batched transition rows for every column of `x_columns` (9 x T), written as
// a 5 x T matrix whose column j is the distribution of s_j given s_{j-1} = k.
void transition_rows_into(const Eigen::Ref<const Eigen::MatrixXd>& x_columns,
                          const CoefficientMatrix& B,
                          Eigen::Ref<Eigen::Matrix<double, kNumMovementTypes, Eigen::Dynamic>> out);

}  // namespace divehmm
