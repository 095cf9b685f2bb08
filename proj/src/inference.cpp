#include "miml/inference.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace miml {

double t_quantile(double df, double p) {
  if (std::isinf(df)) {
    return z_quantile(p);
  }
  if (!(df > 0.0)) {
    throw std::domain_error("t quantile needs positive degrees of freedom");
  }
  boost::math::students_t_distribution<double> dist(df);
  return boost::math::quantile(dist, p);
}

double z_quantile(double p) {
  boost::math::normal_distribution<double> dist(0.0, 1.0);
  return boost::math::quantile(dist, p);
}

Interval ci_t(double point, double se, double df, double level) {
  const double p = 0.5 * (1.0 + level);
  const double q = t_quantile(df, p);
  Interval ci;
  ci.lo = point - q * se;
  ci.hi = point + q * se;
  ci.df = df;
  ci.quantile = q;
  return ci;
}

Interval ci_variance_cuberoot(double point, double se, double df,
                              double level) {
  if (!(point > 0.0)) {
    throw std::domain_error(
        "cube-root variance interval needs a positive point estimate");
  }
  const double g = std::cbrt(point);
  const double se_g = se / (3.0 * g * g);  // g^2 = point^(2/3)
  const double p = 0.5 * (1.0 + level);
  const double q = t_quantile(df, p);
  const double lo_g = g - q * se_g;
  const double hi_g = g + q * se_g;
  Interval ci;
  ci.lo = lo_g * lo_g * lo_g;
  ci.hi = hi_g * hi_g * hi_g;
  ci.df = df;
  ci.quantile = q;
  return ci;
}

double df_ml(double nu_comp, double gamma) {
  if (gamma >= 1.0) {
    return 0.0;
  }
  return nu_comp * (1.0 - gamma) * (nu_comp + 1.0) / (nu_comp + 3.0);
}

double df_ml_star(double n, double k, double gamma) {
  return std::max(0.0, n * (1.0 - gamma) - k);
}

double df_pdmi(double gamma, double D, double nu_comp) {
  const double nu_obs = df_ml(nu_comp, gamma);
  if (gamma <= 0.0) {
    return nu_obs;
  }
  if (gamma >= 1.0) {
    return 0.0;
  }
  const double nu_between = (D - 1.0) / (gamma * gamma);
  return 1.0 / (1.0 / nu_between + 1.0 / nu_obs);
}

Interval ml_interval(const MlFitResult &fit, const InfoReport &report,
                     Estimand e, MlCiMethod method, bool bounded,
                     double level) {
  const auto idx = static_cast<std::size_t>(e);
  const double point = fit.estimates.v[idx];
  const double se = report.se_obs[idx];
  const double gamma = report.gamma[idx];
  const double n = static_cast<double>(fit.n);

  double df = std::numeric_limits<double>::infinity();
  switch (method) {
    case MlCiMethod::Normal:
      break;
    case MlCiMethod::T:
      df = df_ml(n - 2.0, gamma);
      break;
    case MlCiMethod::TStar:
      df = df_ml_star(n, 2.0, gamma);
      break;
  }
  if (bounded && std::isfinite(df)) {
    df = std::max(3.0, df);
  }
  if (is_variance_type(e)) {
    return ci_variance_cuberoot(point, se, df, level);
  }
  return ci_t(point, se, df, level);
}

Interval pdmi_interval(const MIResult &mi, int n, Estimand e, bool bounded,
                       double level) {
  const auto idx = static_cast<std::size_t>(e);
  const double point = mi.point.v[idx];
  const double se = std::sqrt(mi.t_var[idx]);
  double df = df_pdmi(mi.gamma[idx], static_cast<double>(mi.D),
                      static_cast<double>(n) - 2.0);
  if (bounded) {
    df = std::max(3.0, df);
  }
  if (is_variance_type(e)) {
    return ci_variance_cuberoot(point, se, df, level);
  }
  return ci_t(point, se, df, level);
}

}  // namespace miml
