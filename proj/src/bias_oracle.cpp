#include "miml/bias_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace miml {

Mat2 var_beta_ml(const PopulationSpec &spec, double n0_effective) {
  if (!(n0_effective > 0.0)) {
    throw std::invalid_argument("effective complete-case count must be > 0");
  }
  // Moments of X within the observed stratum.
  double m = 0.0;
  double v = 1.0;
  if (spec.pattern == Pattern::MXN) {
    m = std::sqrt(2.0 / std::numbers::pi);  // mean of X given X >= 0
    v = (std::numbers::pi - 2.0) / std::numbers::pi;
  }
  const double sigma2 = 1.0 - spec.rho * spec.rho;
  const double c = sigma2 / n0_effective;
  Mat2 out;
  out[0][0] = c * (1.0 + m * m / v);
  out[0][1] = -c * m / v;
  out[1][0] = out[0][1];
  out[1][1] = c / v;
  return out;
}

Mat2 sigma_mxm(const PopulationSpec &spec) {
  const XymxmMoments joint = xymxm_moments(spec);
  Mat2 out;
  out[0][0] = joint.cov[2][2];
  out[0][1] = joint.cov[2][3];
  out[1][0] = joint.cov[3][2];
  out[1][1] = joint.cov[3][3];
  return out;
}

double bias_resid_var(ResidVarMethod method, double n0, int nu_prior,
                      double sigma2_yx) {
  if (method == ResidVarMethod::ML) {
    if (!(n0 > 0.0)) {
      throw std::invalid_argument("n0 must be positive");
    }
    return -2.0 * sigma2_yx / n0;
  }
  const double denom = (n0 - 2.0) - (2.0 - nu_prior);
  if (!(denom > 0.0)) {
    // The scaled draw is sigma2_ml * n0 / U with U chi-square on
    // n0 - 2 + nu_prior df; its mean is finite only when those df exceed 2,
    // i.e. when n0 - 4 + nu_prior > 0.
    throw std::domain_error(
        "residual-variance bias undefined: posterior mean does not exist "
        "when n0 - 4 + nu_prior <= 0");
  }
  return (2.0 - nu_prior) / denom * sigma2_yx;
}

BiasReport bias_sigma2_y(const PopulationSpec &spec, int n, BiasMethod method,
                         int nu_prior, bool exact_factor) {
  const double n0 = static_cast<double>(n) * (1.0 - spec.p);
  const double sigma2 = 1.0 - spec.rho * spec.rho;

  Mat2 sab = var_beta_ml(spec, n0);
  double factor = 1.0;
  if (method == BiasMethod::PDSI) {
    if (exact_factor) {
      const double denom = n0 + nu_prior - 4.0;
      if (!(denom > 0.0)) {
        throw std::domain_error(
            "exact posterior-draw variance factor undefined: "
            "n0 + nu_prior - 4 must be positive");
      }
      factor = 1.0 + n0 / denom;
    } else {
      factor = 2.0;
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      sab[i][j] *= factor;
    }
  }

  const Mat2 smxm = sigma_mxm(spec);
  const double quad = smxm[0][0] * sab[0][0] +
                      smxm[0][1] * sab[1][0] +
                      smxm[1][0] * sab[0][1] + smxm[1][1] * sab[1][1];

  const ResidVarMethod rv = (method == BiasMethod::MLSI) ? ResidVarMethod::ML
                                                         : ResidVarMethod::PD;
  const double resid = spec.p * bias_resid_var(rv, n0, nu_prior, sigma2);

  BiasReport report;
  report.quad_term = quad;
  report.resid_term = resid;
  report.total = quad + resid;
  report.spec = spec;
  report.n = n;
  report.n0_effective = n0;
  report.method = method;
  report.nu_prior = nu_prior;
  report.exact_factor = exact_factor;
  return report;
}

double quadratic_form_expectation(const Mat2 &sigma_mxm, const Mat2 &sigma_ab,
                                  double beta, double sigma2_x) {
  const double trace = sigma_mxm[0][0] * sigma_ab[0][0] +
                       sigma_mxm[0][1] * sigma_ab[1][0] +
                       sigma_mxm[1][0] * sigma_ab[0][1] +
                       sigma_mxm[1][1] * sigma_ab[1][1];
  return trace + beta * beta * sigma2_x;
}

}  // namespace miml
