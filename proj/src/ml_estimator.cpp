#include "miml/ml_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace miml {

namespace {

// Inverse of a symmetric 2x2.
Mat2 inv2(const Mat2 &a) {
  double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (det == 0.0 || !std::isfinite(det)) {
    throw std::invalid_argument("singular 2x2 information block");
  }
  return Mat2{{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

using Mat3 = std::array<std::array<double, 3>, 3>;

// Inverse of a 3x3 by adjugate.
Mat3 inv3(const Mat3 &m) {
  double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
  if (det == 0.0 || !std::isfinite(det)) {
    throw std::invalid_argument("singular 3x3 information block");
  }
  Mat3 inv;
  inv[0][0] = c00 / det;
  inv[1][0] = c01 / det;
  inv[2][0] = c02 / det;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return inv;
}

// The 5x5 information is block diagonal; invert blockwise.
Mat5 inv5_block(const Mat5 &info) {
  Mat2 a{{{info[0][0], info[0][1]}, {info[1][0], info[1][1]}}};
  Mat3 b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = info[2 + i][2 + j];
  Mat2 ai = inv2(a);
  Mat3 bi = inv3(b);
  Mat5 out{};
  out[0][0] = ai[0][0];
  out[0][1] = ai[0][1];
  out[1][0] = ai[1][0];
  out[1][1] = ai[1][1];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[2 + i][2 + j] = bi[i][j];
  return out;
}

}  // namespace

EstimateSet derived_estimates(const ThetaBase &t) {
  EstimateSet e;
  e[Estimand::AlphaYX] = t.alpha_yx;
  e[Estimand::BetaYX] = t.beta_yx;
  e[Estimand::VarYX] = t.var_yx;
  const double mu_y = t.alpha_yx + t.beta_yx * t.mu_x;
  const double var_y = t.beta_yx * t.beta_yx * t.var_x + t.var_yx;
  const double cov_xy = t.beta_yx * t.var_x;
  const double beta_xy = cov_xy / var_y;
  e[Estimand::MuY] = mu_y;
  e[Estimand::VarY] = var_y;
  e[Estimand::CovXY] = cov_xy;
  e[Estimand::BetaXY] = beta_xy;
  e[Estimand::AlphaXY] = t.mu_x - beta_xy * mu_y;
  e[Estimand::VarXY] = t.var_x - beta_xy * beta_xy * var_y;
  return e;
}

MlFitResult estimate_ml(const Dataset &ds) {
  const std::size_t n = ds.n();
  if (n < 3) throw std::invalid_argument("need at least 3 cases");

  double sum_x_all = 0.0, sum_xx_all = 0.0;
  CompleteXSums cs{0.0, 0.0, 0.0};
  double sum_y = 0.0, sum_yy = 0.0, sum_xy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = ds.x[i];
    sum_x_all += xi;
    sum_xx_all += xi * xi;
    if (!ds.missing[i]) {
      const double yi = ds.y[i];
      cs.n0 += 1.0;
      cs.sum_x += xi;
      cs.sum_xx += xi * xi;
      sum_y += yi;
      sum_yy += yi * yi;
      sum_xy += xi * yi;
    }
  }
  if (cs.n0 < 3.0) {
    throw std::invalid_argument("need at least 3 complete cases");
  }

  ThetaBase t;
  t.mu_x = sum_x_all / static_cast<double>(n);
  t.var_x = sum_xx_all / static_cast<double>(n) - t.mu_x * t.mu_x;
  if (!(t.var_x > 0.0)) {
    throw std::invalid_argument("degenerate design: X has no spread");
  }
  const double m0 = cs.mean();
  const double v0 = cs.var();
  if (!(v0 > 0.0)) {
    throw std::invalid_argument(
        "degenerate design: complete-case X has no spread");
  }
  const double my = sum_y / cs.n0;
  const double sxy0 = sum_xy / cs.n0 - m0 * my;
  const double syy0 = sum_yy / cs.n0 - my * my;
  t.beta_yx = sxy0 / v0;
  t.alpha_yx = my - t.beta_yx * m0;
  // Mean squared residual over the complete cases (divisor n0).
  t.var_yx = syy0 - t.beta_yx * sxy0;
  if (t.var_yx < 0.0) t.var_yx = 0.0;  // floating-point guard on exact fits

  return MlFitResult{t, derived_estimates(t), cs, n};
}

Mat2 ml_regression_cov(const ThetaBase &theta, const CompleteXSums &sums) {
  const double n0 = sums.n0;
  if (n0 < 3.0) throw std::invalid_argument("need at least 3 complete cases");
  const double m = sums.mean();
  const double v = sums.var();
  if (!(v > 0.0)) throw std::invalid_argument("degenerate design");
  const double s = theta.var_yx / n0;
  return Mat2{{{s * (1.0 + m * m / v), -s * m / v}, {-s * m / v, s / v}}};
}

double observed_loglik(const Dataset &ds, const ThetaBase &t) {
  constexpr double kLog2Pi = 1.8378770664093454836;
  const std::size_t n = ds.n();
  double ll = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = ds.x[i] - t.mu_x;
    ll += -0.5 * (kLog2Pi + std::log(t.var_x) + dx * dx / t.var_x);
    if (!ds.missing[i]) {
      const double r = ds.y[i] - t.alpha_yx - t.beta_yx * ds.x[i];
      ll += -0.5 * (kLog2Pi + std::log(t.var_yx) + r * r / t.var_yx);
    }
  }
  return ll;
}

Mat5 observed_information(const Dataset &ds, const ThetaBase &t) {
  const double n = static_cast<double>(ds.n());
  double s_dx = 0.0, s_dx2 = 0.0;
  double n0 = 0.0, s_x = 0.0, s_xx = 0.0;
  double s_r = 0.0, s_rx = 0.0, s_r2 = 0.0;
  for (std::size_t i = 0; i < ds.n(); ++i) {
    const double dx = ds.x[i] - t.mu_x;
    s_dx += dx;
    s_dx2 += dx * dx;
    if (!ds.missing[i]) {
      const double xi = ds.x[i];
      const double r = ds.y[i] - t.alpha_yx - t.beta_yx * xi;
      n0 += 1.0;
      s_x += xi;
      s_xx += xi * xi;
      s_r += r;
      s_rx += r * xi;
      s_r2 += r * r;
    }
  }
  const double vx = t.var_x, vx2 = vx * vx, vx3 = vx2 * vx;
  const double s2 = t.var_yx, s4 = s2 * s2, s6 = s4 * s2;
  Mat5 info{};
  info[0][0] = n / vx;
  info[0][1] = info[1][0] = s_dx / vx2;
  info[1][1] = -n / (2.0 * vx2) + s_dx2 / vx3;
  info[2][2] = n0 / s2;
  info[2][3] = info[3][2] = s_x / s2;
  info[3][3] = s_xx / s2;
  info[2][4] = info[4][2] = s_r / s4;
  info[3][4] = info[4][3] = s_rx / s4;
  info[4][4] = -n0 / (2.0 * s4) + s_r2 / s6;
  return info;
}

Mat5 complete_information(const ThetaBase &t, std::size_t n_in) {
  const double n = static_cast<double>(n_in);
  const double vx = t.var_x, vx2 = vx * vx;
  const double s2 = t.var_yx, s4 = s2 * s2;
  Mat5 info{};
  info[0][0] = n / vx;
  // At expected sums the centered first moment vanishes and the centered
  // second moment equals n*var_x, so the X block is diagonal.
  info[1][1] = n / (2.0 * vx2);
  info[2][2] = n / s2;
  info[2][3] = info[3][2] = n * t.mu_x / s2;
  info[3][3] = n * (vx + t.mu_x * t.mu_x) / s2;
  // Expected residual sums: sum r = 0, sum r*x = 0, sum r^2 = n*var_yx.
  info[4][4] = n / (2.0 * s4);
  return info;
}

Vec5 estimand_gradient(const ThetaBase &t, Estimand e) {
  const double mu_x = t.mu_x, var_x = t.var_x;
  const double beta = t.beta_yx, s2 = t.var_yx;
  const double mu_y = t.alpha_yx + beta * mu_x;
  const double var_y = beta * beta * var_x + s2;
  const double bxy = beta * var_x / var_y;
  const double vy2 = var_y * var_y;
  // Partials of beta_xy = beta*var_x / (beta^2*var_x + s2).
  const double dbxy_dvarx = beta * s2 / vy2;
  const double dbxy_dbeta = var_x * (var_y - 2.0 * beta * beta * var_x) / vy2;
  const double dbxy_ds2 = -beta * var_x / vy2;
  switch (e) {
    case Estimand::AlphaYX:
      return {0, 0, 1, 0, 0};
    case Estimand::BetaYX:
      return {0, 0, 0, 1, 0};
    case Estimand::VarYX:
      return {0, 0, 0, 0, 1};
    case Estimand::MuY:
      return {beta, 0, 1, mu_x, 0};
    case Estimand::VarY:
      return {0, beta * beta, 0, 2.0 * beta * var_x, 1};
    case Estimand::CovXY:
      return {0, beta, 0, var_x, 0};
    case Estimand::BetaXY:
      return {0, dbxy_dvarx, 0, dbxy_dbeta, dbxy_ds2};
    case Estimand::AlphaXY:
      // alpha_xy = mu_x - beta_xy * mu_y
      return {1.0 - bxy * beta, -mu_y * dbxy_dvarx, -bxy,
              -mu_y * dbxy_dbeta - bxy * mu_x, -mu_y * dbxy_ds2};
    case Estimand::VarXY: {
      // var_xy = var_x - beta_xy^2 * var_y; var_y itself depends on
      // (var_x, beta, s2).
      const double c = 2.0 * bxy * var_y;
      return {0, 1.0 - c * dbxy_dvarx - bxy * bxy * beta * beta, 0,
              -c * dbxy_dbeta - bxy * bxy * 2.0 * beta * var_x,
              -c * dbxy_ds2 - bxy * bxy};
    }
  }
  throw std::logic_error("unknown estimand");
}

double se_for_estimand(const ThetaBase &theta, const Mat5 &info, Estimand e) {
  const Mat5 cov = inv5_block(info);
  const Vec5 g = estimand_gradient(theta, e);
  double q = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) q += g[i] * cov[i][j] * g[j];
  }
  if (q < 0.0) q = 0.0;  // numerical guard
  return std::sqrt(q);
}

InfoReport information_report(const Dataset &ds, const MlFitResult &fit) {
  InfoReport rep;
  rep.obs_info = observed_information(ds, fit.theta);
  rep.comp_info = complete_information(fit.theta, fit.n);
  for (std::size_t i = 0; i < kEstimandCount; ++i) {
    const Estimand e = static_cast<Estimand>(i);
    rep.se_obs[i] = se_for_estimand(fit.theta, rep.obs_info, e);
    rep.se_comp[i] = se_for_estimand(fit.theta, rep.comp_info, e);
    double g = 0.0;
    if (rep.se_obs[i] > 0.0) {
      const double ratio = rep.se_comp[i] / rep.se_obs[i];
      g = 1.0 - ratio * ratio;
    }
    rep.gamma[i] = std::clamp(g, 0.0, 1.0);
  }
  return rep;
}

double fraction_missing_information(const Dataset &ds, Estimand e) {
  const MlFitResult fit = estimate_ml(ds);
  const InfoReport rep = information_report(ds, fit);
  return rep.gamma[static_cast<int>(e)];
}

}  // namespace miml
