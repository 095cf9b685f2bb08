#pragma once

#include "miml/population.hpp"

namespace miml {

enum class BiasMethod { MLSI, PDSI };

// Closed-form prediction of the bias of the single-imputation estimate of
// the variance of Y, split into the two additive sources: imputation-noise
// carried through the coefficient uncertainty (quad_term) and the bias of
// the residual-variance estimate itself (resid_term).
struct BiasReport {
  double quad_term = 0.0;
  double resid_term = 0.0;
  double total = 0.0;
  // Inputs echoed for reporting.
  PopulationSpec spec;
  int n = 0;
  double n0_effective = 0.0;
  BiasMethod method = BiasMethod::MLSI;
  int nu_prior = 0;
  bool exact_factor = false;
};

// Asymptotic covariance of the complete-case OLS intercept/slope, evaluated
// at the population moments of X within the observed stratum (for the X<0
// masking pattern the observed stratum is X >= 0, mean +sqrt(2/pi); under
// random masking the observed stratum matches the marginal, mean 0 and
// variance 1). The (2,2) entry is also the bias of the squared slope
// estimate.
Mat2 var_beta_ml(const PopulationSpec &spec, double n0_effective);

// Covariance matrix of (M, XM) where M is the masking indicator and XM the
// product of X with it: the lower-right 2x2 corner of the joint moments of
// (X, Y, M, XM).
Mat2 sigma_mxm(const PopulationSpec &spec);

// Bias of the residual-variance estimate. method ML: -2*sigma2_yx/n0
// (divisor-n0 estimate). method PD: (2-nu_prior)/((n0-2)-(2-nu_prior)) *
// sigma2_yx, the mean excess of the posterior-scaled draw; throws
// std::domain_error when that denominator is zero.
enum class ResidVarMethod { ML, PD };
double bias_resid_var(ResidVarMethod method, double n0, int nu_prior,
                      double sigma2_yx);

// Predicted bias of the single-imputation variance of Y at sample size n:
// quad_term = tr(sigma_mxm * sigma_ab) with sigma_ab from var_beta_ml
// (doubled for PDSI; exact_factor = true replaces the factor 2 by
// 1 + n0/(n0 + nu_prior - 4)), resid_term = p * bias_resid_var, n0 taken at
// its expectation n*(1-p).
BiasReport bias_sigma2_y(const PopulationSpec &spec, int n, BiasMethod method,
                         int nu_prior, bool exact_factor = false);

// E[v' A v] + beta^2*sigma2_x for v ~ N(0, sigma_ab) and A = sigma_mxm:
// tr(sigma_mxm*sigma_ab) + beta^2*sigma2_x. Both matrices must be symmetric.
double quadratic_form_expectation(const Mat2 &sigma_mxm, const Mat2 &sigma_ab,
                                  double beta, double sigma2_x);

}  // namespace miml
