#pragma once

#include <array>
#include <cstddef>

#include "miml/estimands.hpp"
#include "miml/population.hpp"

namespace miml {

using Mat5 = std::array<std::array<double, 5>, 5>;
using Vec5 = std::array<double, 5>;

// Base parameterization of the factored likelihood: the X marginal
// (mu_x, var_x) plus the regression of Y on X (alpha, beta, resid var).
// Parameter order in all 5x5 matrices and gradients:
//   (mu_x, var_x, alpha_yx, beta_yx, var_yx).
struct ThetaBase {
  double mu_x, var_x;
  double alpha_yx, beta_yx, var_yx;
};

// Complete-case design sums used by the regression covariance and the
// posterior draws: count, sum of x, sum of x^2 over cases with Y observed.
struct CompleteXSums {
  double n0;
  double sum_x;
  double sum_xx;

  double mean() const { return sum_x / n0; }
  // n0-divisor variance of the complete-case design.
  double var() const {
    double m = mean();
    return sum_xx / n0 - m * m;
  }
};

// Observed and complete-data information with the per-estimand standard
// errors and fractions of missing information derived from them.
struct InfoReport {
  Mat5 obs_info;
  Mat5 comp_info;
  std::array<double, kEstimandCount> se_obs;
  std::array<double, kEstimandCount> se_comp;
  std::array<double, kEstimandCount> gamma;
};

// Full ML fit of one incomplete dataset: X moments over all n cases with
// divisor n; ordinary least squares on the n0 complete cases; residual
// variance with divisor n0. Throws std::invalid_argument when n0 < 3 or the
// design is degenerate (no spread in X).
struct MlFitResult {
  ThetaBase theta;
  EstimateSet estimates;
  CompleteXSums sums;
  std::size_t n;
};

MlFitResult estimate_ml(const Dataset &dataset);

// The six derived estimands as exact functions of ThetaBase; the returned set
// satisfies var_y = beta^2*var_x + var_yx, cov_xy = beta*var_x,
// beta_xy = cov_xy/var_y, var_xy = var_x - beta_xy^2*var_y,
// alpha_xy = mu_x - beta_xy*mu_y identically.
EstimateSet derived_estimates(const ThetaBase &theta);

// Finite-sample covariance of (alpha, beta) from the complete-case design:
//   (var_yx/n0) * [[1 + m^2/v, -m/v], [-m/v, 1/v]]
// with m, v the complete-case mean and n0-divisor variance of X.
Mat2 ml_regression_cov(const ThetaBase &theta, const CompleteXSums &sums);

// Analytic observed information of the factored likelihood, evaluated at
// theta: a 2x2 block for (mu_x, var_x) over all n cases and a 3x3 block for
// (alpha, beta, var_yx) over the n0 complete cases. Cross-block entries are
// exactly zero because the likelihood factors.
Mat5 observed_information(const Dataset &dataset, const ThetaBase &theta);

// Information a complete dataset of size n would carry at theta, with the
// design sums replaced by their expectations under theta
// (sum x -> n*mu_x, sum x^2 -> n*(var_x + mu_x^2), residuals at zero).
Mat5 complete_information(const ThetaBase &theta, std::size_t n);

// Gradient of one estimand's mapping from ThetaBase (identity rows for the
// base parameters, product/quotient rules for the derived ones).
Vec5 estimand_gradient(const ThetaBase &theta, Estimand e);

// Delta-method standard error sqrt(g' * info^{-1} * g). Throws
// std::invalid_argument when the information matrix is singular.
double se_for_estimand(const ThetaBase &theta, const Mat5 &info, Estimand e);

// Observed and complete information plus per-estimand se and gamma for one
// dataset. gamma = 1 - (se_comp/se_obs)^2 clamped to [0, 1]; mu_x's gamma is
// exactly zero because X is fully observed.
InfoReport information_report(const Dataset &dataset, const MlFitResult &fit);

// Convenience wrapper: gamma for a single estimand.
double fraction_missing_information(const Dataset &dataset, Estimand e);

// Log-likelihood of the observed data at theta (X marginal over all cases
// plus the regression over complete cases); exposed for the finite-difference
// cross-checks of the analytic information.
double observed_loglik(const Dataset &dataset, const ThetaBase &theta);

}  // namespace miml
