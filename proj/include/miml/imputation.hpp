#pragma once

#include <cstdint>

#include "miml/estimands.hpp"
#include "miml/ml_estimator.hpp"
#include "miml/population.hpp"
#include "miml/rng.hpp"

namespace miml {

enum class ImputationMethod { MLMI, PDMI };

// D = 1 gives the single-imputation variants (MLSI / PDSI).
struct ImputationConfig {
  ImputationMethod method = ImputationMethod::PDMI;
  int D = 5;
  int nu_prior = 0;  // prior df of the residual-variance posterior; PDMI only
};

struct PosteriorDraw {
  double alpha, beta, sigma2;
};

// A dataset whose masked Y cells have been filled in; `missing` still marks
// which cells were imputed.
struct ImputedDataset {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<bool> missing;
};

// Auxiliary complete-data sample moments kept alongside the estimates so the
// per-estimand complete-data variances can be formed without re-scanning.
struct CompleteDataAux {
  double n;
  double mean_x, mean_y;
  double s2_x, s2_y, s_xy;  // (n-1)-divisor variance/covariance
  double var_yx, var_xy;    // (n-2)-divisor residual variances
};

// Pooled multiple-imputation result: point estimates averaged over D
// single-imputation analyses, with within/between/total variances and the
// fraction of missing information per estimand.
struct MIResult {
  EstimateSet point;
  std::array<double, kEstimandCount> w_bar{};
  std::array<double, kEstimandCount> b{};
  std::array<double, kEstimandCount> t_var{};
  std::array<double, kEstimandCount> gamma{};
  int D = 0;
  ImputationMethod method = ImputationMethod::PDMI;
  int nu_prior = 0;
};

// Addresses the random streams of one replication so posterior draws and
// imputation noise for imputation d come from independent substreams.
struct StreamContext {
  std::uint64_t seed;
  std::uint32_t replication;

  Stream make(Purpose purpose, std::uint32_t substream = 0) const {
    return Stream(seed, replication, purpose, substream);
  }
};

// Draws (alpha, beta, sigma2) from the posterior of the regression of Y on X:
// sigma2 = var_yx * n0 / U with U chi-square on (n0 - 2 + nu_prior) df, then
// coefficients bivariate normal around the ML estimates with covariance
// ml_regression_cov rescaled by sigma2/var_yx. Throws std::domain_error when
// n0 - 2 + nu_prior <= 0.
PosteriorDraw draw_posterior(const ThetaBase &theta_ml,
                             const CompleteXSums &sums, int nu_prior,
                             Stream &rng);

// Fills each masked y with alpha + beta*x + e, e ~ N(0, sigma2); observed
// values are copied untouched.
ImputedDataset impute_once(const Dataset &dataset, double alpha, double beta,
                           double sigma2, Stream &rng);

// Textbook complete-data statistics of an imputed dataset: means with divisor
// n, variances/covariance with divisor n-1, both OLS regressions, residual
// variances with divisor n-2.
EstimateSet complete_data_estimates(const ImputedDataset &imputed,
                                    CompleteDataAux *aux = nullptr);

// Normal-theory complete-data sampling variance of one estimand:
//   mu_y                -> s2_y / n
//   alpha/beta (either) -> OLS coefficient variance
//   variance-type       -> 2*estimate^2 / (n-1)
//   cov_xy              -> (s2_x*s2_y + s_xy^2) / (n-1)
double complete_data_variance(const EstimateSet &est,
                              const CompleteDataAux &aux, Estimand e);

// Runs D imputations and pools. MLMI drives every imputation with the same
// ML parameter values; PDMI draws fresh posterior parameters per imputation.
// Pooling: point = mean of the D estimates, b with divisor D-1,
// t = w_bar + (1+1/D)*b, gamma = (1+1/D)*b / t (0 when t is 0).
MIResult run_mi(const Dataset &dataset, const ImputationConfig &config,
                const StreamContext &streams);

}  // namespace miml
