#include "divehmm/transition_model.hpp"

namespace divehmm {

AnimalCoefficients zero_coefficients() {
  AnimalCoefficients B;
  for (auto& Bk : B) Bk.setZero();
  return B;
}

void softmax_columns_into(
    const Eigen::Ref<const Eigen::Matrix<double, kFreeTypes, Eigen::Dynamic>>& log_odds,
    Eigen::Ref<Eigen::Matrix<double, kNumMovementTypes, Eigen::Dynamic>> out) {
  const Eigen::RowVectorXd shift = log_odds.colwise().maxCoeff().cwiseMax(0.0);
  out.topRows<kFreeTypes>() = (log_odds.rowwise() - shift).array().exp();
  out.row(kNumMovementTypes - 1) = (-shift).array().exp();
  out = out.cwiseMax(kProbFloor);
  const Eigen::RowVectorXd inv_sums = out.colwise().sum().cwiseInverse();
  out.array().rowwise() *= inv_sums.array();
}

void transition_rows_into(
    const Eigen::Ref<const Eigen::MatrixXd>& x_columns, const CoefficientMatrix& B,
    Eigen::Ref<Eigen::Matrix<double, kNumMovementTypes, Eigen::Dynamic>> out) {
  const Eigen::Matrix<double, kFreeTypes, Eigen::Dynamic> log_odds =
      B.leftCols<kFreeTypes>().transpose() * x_columns;
  softmax_columns_into(log_odds, out);
}

}  // namespace divehmm
