#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace miml {

// The nine quantities every estimator in this library reports, in the fixed
// column order used by all tables and CSV output. The first five describe the
// regression of Y on X plus the Y marginal; the last four are obtained from
// the joint distribution (covariance and the reverse regression of X on Y).
enum class Estimand : int {
  AlphaYX = 0,  // intercept of Y on X
  BetaYX = 1,   // slope of Y on X
  VarYX = 2,    // residual variance of Y given X
  MuY = 3,      // mean of Y
  VarY = 4,     // variance of Y
  CovXY = 5,    // covariance of X and Y
  AlphaXY = 6,  // intercept of X on Y
  BetaXY = 7,   // slope of X on Y
  VarXY = 8,    // residual variance of X given Y
};

inline constexpr std::size_t kEstimandCount = 9;

inline constexpr std::array<std::string_view, kEstimandCount> kEstimandNames = {
    "alpha_yx", "beta_yx", "var_yx", "mu_y",   "var_y",
    "cov_xy",   "alpha_xy", "beta_xy", "var_xy"};

// Variance-type estimands get cube-root-transformed confidence intervals.
inline constexpr bool is_variance_type(Estimand e) {
  return e == Estimand::VarYX || e == Estimand::VarY || e == Estimand::VarXY;
}

// One value per estimand, indexed by Estimand order.
struct EstimateSet {
  std::array<double, kEstimandCount> v{};

  double &operator[](Estimand e) { return v[static_cast<int>(e)]; }
  double operator[](Estimand e) const { return v[static_cast<int>(e)]; }
  double &operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
};

// True parameter values in a standardized bivariate normal population with
// correlation rho: both regressions have intercept 0, slope rho, and residual
// variance 1 - rho^2; means are 0 and variances 1.
inline EstimateSet true_values(double rho) {
  EstimateSet t;
  t[Estimand::AlphaYX] = 0.0;
  t[Estimand::BetaYX] = rho;
  t[Estimand::VarYX] = 1.0 - rho * rho;
  t[Estimand::MuY] = 0.0;
  t[Estimand::VarY] = 1.0;
  t[Estimand::CovXY] = rho;
  t[Estimand::AlphaXY] = 0.0;
  t[Estimand::BetaXY] = rho;
  t[Estimand::VarXY] = 1.0 - rho * rho;
  return t;
}

}  // namespace miml
