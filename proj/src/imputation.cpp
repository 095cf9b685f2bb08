#include "miml/imputation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace miml {

PosteriorDraw draw_posterior(const ThetaBase &theta_ml,
                             const CompleteXSums &sums, int nu_prior,
                             Stream &rng) {
  const double post_df = static_cast<double>(sums.n0) - 2.0 + nu_prior;
  if (!(post_df > 0.0)) {
    throw std::domain_error(
        "posterior degrees of freedom (n0 - 2 + nu_prior) must be positive");
  }
  if (!(theta_ml.var_yx > 0.0)) {
    throw std::domain_error(
        "residual variance must be positive to draw posterior parameters");
  }

  // Consumption order is part of the reproducibility contract:
  // first the chi-square deviate, then the two coefficient normals.
  const double u = rng.chi_square(post_df);
  const double z1 = rng.normal();
  const double z2 = rng.normal();

  const double sigma2 = theta_ml.var_yx * static_cast<double>(sums.n0) / u;

  Mat2 cov = ml_regression_cov(theta_ml, sums);
  const double scale = sigma2 / theta_ml.var_yx;
  const double c00 = cov[0][0] * scale;
  const double c01 = cov[0][1] * scale;
  const double c11 = cov[1][1] * scale;

  // 2x2 Cholesky factor of the scaled coefficient covariance.
  const double l11 = std::sqrt(c00);
  const double l21 = c01 / l11;
  const double l22 = std::sqrt(std::max(0.0, c11 - l21 * l21));

  PosteriorDraw draw;
  draw.alpha = theta_ml.alpha_yx + l11 * z1;
  draw.beta = theta_ml.beta_yx + l21 * z1 + l22 * z2;
  draw.sigma2 = sigma2;
  return draw;
}

ImputedDataset impute_once(const Dataset &dataset, double alpha, double beta,
                           double sigma2, Stream &rng) {
  const double sd = std::sqrt(sigma2);
  ImputedDataset out;
  out.x = dataset.x;
  out.y = dataset.y;
  out.missing = dataset.missing;
  for (std::size_t i = 0; i < out.x.size(); ++i) {
    if (out.missing[i]) {
      out.y[i] = alpha + beta * out.x[i] + sd * rng.normal();
    }
  }
  return out;
}

EstimateSet complete_data_estimates(const ImputedDataset &imputed,
                                    CompleteDataAux *aux) {
  const std::size_t n = imputed.x.size();
  if (n < 3) {
    throw std::invalid_argument(
        "complete-data estimates need at least 3 cases");
  }
  const double dn = static_cast<double>(n);

  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += imputed.x[i];
    sy += imputed.y[i];
  }
  const double mx = sx / dn;
  const double my = sy / dn;

  double cxx = 0.0, cyy = 0.0, cxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = imputed.x[i] - mx;
    const double dy = imputed.y[i] - my;
    cxx += dx * dx;
    cyy += dy * dy;
    cxy += dx * dy;
  }
  if (!(cxx > 0.0) || !(cyy > 0.0)) {
    throw std::invalid_argument(
        "complete-data estimates need variation in both X and Y");
  }

  const double beta_yx = cxy / cxx;
  const double alpha_yx = my - beta_yx * mx;
  const double var_yx = std::max(0.0, cyy - beta_yx * cxy) / (dn - 2.0);
  const double beta_xy = cxy / cyy;
  const double alpha_xy = mx - beta_xy * my;
  const double var_xy = std::max(0.0, cxx - beta_xy * cxy) / (dn - 2.0);

  EstimateSet est;
  est[Estimand::AlphaYX] = alpha_yx;
  est[Estimand::BetaYX] = beta_yx;
  est[Estimand::VarYX] = var_yx;
  est[Estimand::MuY] = my;
  est[Estimand::VarY] = cyy / (dn - 1.0);
  est[Estimand::CovXY] = cxy / (dn - 1.0);
  est[Estimand::AlphaXY] = alpha_xy;
  est[Estimand::BetaXY] = beta_xy;
  est[Estimand::VarXY] = var_xy;

  if (aux != nullptr) {
    aux->n = dn;
    aux->mean_x = mx;
    aux->mean_y = my;
    aux->s2_x = cxx / (dn - 1.0);
    aux->s2_y = cyy / (dn - 1.0);
    aux->s_xy = cxy / (dn - 1.0);
    aux->var_yx = var_yx;
    aux->var_xy = var_xy;
  }
  return est;
}

double complete_data_variance(const EstimateSet &est,
                              const CompleteDataAux &aux, Estimand e) {
  const double n = aux.n;
  const double cxx = (n - 1.0) * aux.s2_x;  // centered sum of squares of X
  const double cyy = (n - 1.0) * aux.s2_y;
  switch (e) {
    case Estimand::AlphaYX:
      return est[Estimand::VarYX] * (1.0 / n + aux.mean_x * aux.mean_x / cxx);
    case Estimand::BetaYX:
      return est[Estimand::VarYX] / cxx;
    case Estimand::MuY:
      return aux.s2_y / n;
    case Estimand::CovXY:
      return (aux.s2_x * aux.s2_y + aux.s_xy * aux.s_xy) / (n - 1.0);
    case Estimand::AlphaXY:
      return est[Estimand::VarXY] * (1.0 / n + aux.mean_y * aux.mean_y / cyy);
    case Estimand::BetaXY:
      return est[Estimand::VarXY] / cyy;
    case Estimand::VarYX:
    case Estimand::VarY:
    case Estimand::VarXY: {
      const double v = est[e];
      return 2.0 * v * v / (n - 1.0);
    }
  }
  throw std::logic_error("unknown estimand");
}

MIResult run_mi(const Dataset &dataset, const ImputationConfig &config,
                const StreamContext &streams) {
  if (config.D < 1) {
    throw std::invalid_argument("number of imputations D must be >= 1");
  }
  const MlFitResult fit = estimate_ml(dataset);

  const int D = config.D;
  std::vector<EstimateSet> per_draw(static_cast<std::size_t>(D));
  std::array<double, kEstimandCount> w_sum{};

  for (int d = 0; d < D; ++d) {
    PosteriorDraw draw;
    if (config.method == ImputationMethod::PDMI) {
      Stream post =
          streams.make(Purpose::Posterior, static_cast<std::uint32_t>(d));
      draw = draw_posterior(fit.theta, fit.sums, config.nu_prior, post);
    } else {
      draw.alpha = fit.theta.alpha_yx;
      draw.beta = fit.theta.beta_yx;
      draw.sigma2 = fit.theta.var_yx;
    }

    Stream imp =
        streams.make(Purpose::Imputation, static_cast<std::uint32_t>(d));
    const ImputedDataset imputed =
        impute_once(dataset, draw.alpha, draw.beta, draw.sigma2, imp);

    CompleteDataAux aux;
    per_draw[static_cast<std::size_t>(d)] =
        complete_data_estimates(imputed, &aux);
    for (int k = 0; k < kEstimandCount; ++k) {
      w_sum[static_cast<std::size_t>(k)] += complete_data_variance(
          per_draw[static_cast<std::size_t>(d)], aux, static_cast<Estimand>(k));
    }
  }

  MIResult out;
  out.D = D;
  out.method = config.method;
  out.nu_prior = config.nu_prior;

  const double dd = static_cast<double>(D);
  for (int k = 0; k < kEstimandCount; ++k) {
    const auto ke = static_cast<std::size_t>(k);
    double mean = 0.0;
    for (int d = 0; d < D; ++d) {
      mean += per_draw[static_cast<std::size_t>(d)].v[ke];
    }
    mean /= dd;
    out.point.v[ke] = mean;

    double b = 0.0;
    if (D > 1) {
      for (int d = 0; d < D; ++d) {
        const double dev = per_draw[static_cast<std::size_t>(d)].v[ke] - mean;
        b += dev * dev;
      }
      b /= (dd - 1.0);
    }
    const double w_bar = w_sum[ke] / dd;
    const double t = w_bar + (1.0 + 1.0 / dd) * b;

    out.w_bar[ke] = w_bar;
    out.b[ke] = b;
    out.t_var[ke] = t;
    double g = 0.0;
    if (t > 0.0) {
      g = (1.0 + 1.0 / dd) * b / t;
    }
    out.gamma[ke] = std::min(1.0, std::max(0.0, g));
  }
  return out;
}

}  // namespace miml
