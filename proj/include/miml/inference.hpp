#pragma once

#include "miml/estimands.hpp"
#include "miml/imputation.hpp"
#include "miml/ml_estimator.hpp"

namespace miml {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double df = 0.0;        // infinity for normal-quantile intervals
  double quantile = 0.0;  // the two-sided critical value actually used

  double length() const { return hi - lo; }
};

// Student-t quantile at probability p on df degrees of freedom; df may be
// infinite (normal quantile). Throws std::domain_error for df <= 0.
double t_quantile(double df, double p);

// Standard normal quantile.
double z_quantile(double p);

// Symmetric interval point +/- q*se with q the two-sided t critical value.
Interval ci_t(double point, double se, double df, double level);

// Interval for a positive variance-type estimand built on the cube-root
// scale: g = point^(1/3), se_g = se / (3*point^(2/3)); symmetric t interval
// for g, endpoints cubed back. Throws std::domain_error when point <= 0.
Interval ci_variance_cuberoot(double point, double se, double df,
                              double level);

// Degrees of freedom for ML-based t intervals given the complete-data df and
// the estimated fraction of missing information.
double df_ml(double nu_comp, double gamma);

// Simpler alternative: max(0, n*(1-gamma) - k) with k the number of
// parameters in the relevant regression (2 here).
double df_ml_star(double n, double k, double gamma);

// Pooled degrees of freedom for multiple-imputation t intervals: harmonic
// combination of the between-imputation df (D-1)/gamma^2 and the
// observed-data df. gamma = 0 returns the observed-data df, gamma = 1
// returns 0.
double df_pdmi(double gamma, double D, double nu_comp);

enum class MlCiMethod { Normal, T, TStar };

// Confidence interval for one estimand from an ML fit. Variance-type
// estimands always go through the cube-root construction, whatever the
// quantile rule. bounded = true floors finite df at 3.
Interval ml_interval(const MlFitResult &fit, const InfoReport &report,
                     Estimand e, MlCiMethod method, bool bounded,
                     double level);

// Confidence interval for one estimand from a pooled multiple-imputation
// result on a dataset of size n. Pooling happens on the raw scale; the
// interval for variance-type estimands is then built on the cube-root scale
// from the pooled point and standard error. bounded = true floors df at 3.
Interval pdmi_interval(const MIResult &mi, int n, Estimand e, bool bounded,
                       double level);

}  // namespace miml
