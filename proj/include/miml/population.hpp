#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "miml/rng.hpp"

namespace miml {

using Mat2 = std::array<std::array<double, 2>, 2>;

enum class Pattern { MCAR, MXN };

// A standardized bivariate normal population (means 0, variances 1,
// correlation rho) with a missingness mechanism on Y:
//   MCAR - each Y is masked independently with probability p;
//   MXN  - Y is masked exactly when X < 0 (so p = 1/2 by symmetry).
struct PopulationSpec {
  double rho = 0.5;
  double p = 0.5;
  Pattern pattern = Pattern::MCAR;
};

// Validates and constructs a PopulationSpec; throws std::invalid_argument if
// rho is outside (-1, 1), p outside [0, 1], or pattern is MXN with p != 0.5.
PopulationSpec make_population_spec(double rho, double p, Pattern pattern);

struct BivariateMoments {
  double mu_x, mu_y;
  double var_x, var_y;
  double cov_xy;
};

// Moments of (X, Y) within one missingness stratum of the MXN mechanism,
// i.e. a bivariate normal with X truncated at zero. The stratum label m
// follows the convention that m = 1 carries the positive-mean side and m = 0
// its mirror image; the covariance matrix is the same on both sides.
struct TruncatedMoments {
  std::array<double, 2> mu;
  Mat2 sigma;
  int m;
};

// Means and covariances of the 4-vector (X, Y, M, XM), where M is the
// missingness indicator (M = 1 when Y is masked).
struct XymxmMoments {
  std::array<double, 4> mean;
  std::array<std::array<double, 4>, 4> cov;
};

// Complete X column, partially masked Y column. y[i] is meaningful only where
// missing[i] is false.
struct Dataset {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<bool> missing;

  std::size_t n() const { return x.size(); }
  std::size_t n0() const;  // count of complete cases
  std::size_t n1() const { return n() - n0(); }
};

enum class Direction { YonX, XonY };

struct RegressionParams {
  double alpha, beta, resid_var;
};

// Population moments of (X, Y): means 0, unit variances, covariance rho.
BivariateMoments unconditional_moments(const PopulationSpec &spec);

// Population regression in either direction: intercept 0, slope rho,
// residual variance 1 - rho^2 (identical both ways by standardization).
RegressionParams regression_params(const PopulationSpec &spec, Direction dir);

// Conditional stratum moments for the MXN mechanism (X truncated at zero).
// Throws std::invalid_argument for MCAR, whose conditional moments equal the
// unconditional ones.
TruncatedMoments truncated_conditional_moments(const PopulationSpec &spec,
                                               int m);

// Moments of (X, Y, M, XM) under the population's missingness mechanism
// (spec.pattern). All entries match the
// empirical moments of simulated data; for MXN the masked stratum (X < 0) has
// negative mean, which determines the signs of the M and XM rows.
XymxmMoments xymxm_moments(const PopulationSpec &spec);

// Draws one dataset of size n: X standard normal, Y = rho*X +
// sqrt(1-rho^2)*eps, and Y masked by the population's missingness mechanism
// (spec.pattern).
Dataset sample_dataset(const PopulationSpec &spec, std::size_t n, Stream &rng);

}  // namespace miml
