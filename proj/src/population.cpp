#include "miml/population.hpp"

#include <cmath>
#include <stdexcept>

namespace miml {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);
}  // namespace

std::size_t Dataset::n0() const {
  std::size_t c = 0;
  for (bool m : missing) {
    if (!m) ++c;
  }
  return c;
}

PopulationSpec make_population_spec(double rho, double p, Pattern pattern) {
  if (!(rho > -1.0 && rho < 1.0)) {
    throw std::invalid_argument("rho must lie strictly inside (-1, 1)");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  if (pattern == Pattern::MXN && p != 0.5) {
    throw std::invalid_argument(
        "the X<0 mechanism masks exactly half of Y in expectation; p must be "
        "0.5");
  }
  return PopulationSpec{rho, p, pattern};
}

BivariateMoments unconditional_moments(const PopulationSpec &spec) {
  return BivariateMoments{0.0, 0.0, 1.0, 1.0, spec.rho};
}

RegressionParams regression_params(const PopulationSpec &spec, Direction) {
  return RegressionParams{0.0, spec.rho, 1.0 - spec.rho * spec.rho};
}

TruncatedMoments truncated_conditional_moments(const PopulationSpec &spec,
                                               int m) {
  if (spec.pattern == Pattern::MCAR) {
    throw std::invalid_argument(
        "conditional moments equal unconditional moments under MCAR; use "
        "unconditional_moments");
  }
  if (m != 0 && m != 1) {
    throw std::invalid_argument("stratum label must be 0 or 1");
  }
  const double rho = spec.rho;
  const double sign = (m == 1) ? 1.0 : -1.0;
  TruncatedMoments out;
  out.m = m;
  out.mu = {sign * kSqrt2OverPi, sign * kSqrt2OverPi * rho};
  const double vxx = (kPi - 2.0) / kPi;
  out.sigma = {{{vxx, vxx * rho}, {vxx * rho, (kPi - 2.0 * rho * rho) / kPi}}};
  return out;
}

XymxmMoments xymxmFill(double rho, double p, double mu_masked,
                       double var_masked) {
  // mu_masked / var_masked are the X moments of the masked stratum (M = 1).
  // Entries follow from E[g(X,Y)M] = p * E[g(X,Y) | M=1] with Y = rho*X + e:
  //   cov(X, M)  = p*mu1
  //   cov(X, XM) = p*E[X^2|M=1]        = p*(v1 + mu1^2)
  //   cov(M, XM) = (1-p)*E[XM]         = p*(1-p)*mu1
  //   V(XM)      = p*(v1 + mu1^2) - (p*mu1)^2
  // and every Y entry is rho times its X counterpart.
  const double mu1 = mu_masked, v1 = var_masked;
  const double ex2m = p * (v1 + mu1 * mu1);  // E[X^2 M]
  XymxmMoments out;
  out.mean = {0.0, 0.0, p, p * mu1};
  auto &c = out.cov;
  c[0][0] = 1.0;
  c[0][1] = c[1][0] = rho;
  c[1][1] = 1.0;
  c[0][2] = c[2][0] = p * mu1;
  c[1][2] = c[2][1] = p * mu1 * rho;
  c[2][2] = p * (1.0 - p);
  c[0][3] = c[3][0] = ex2m;
  c[1][3] = c[3][1] = ex2m * rho;
  c[2][3] = c[3][2] = p * (1.0 - p) * mu1;
  c[3][3] = ex2m - (p * mu1) * (p * mu1);
  return out;
}

XymxmMoments xymxm_moments(const PopulationSpec &spec) {
  if (spec.pattern == Pattern::MCAR) {
    return xymxmFill(spec.rho, spec.p, 0.0, 1.0);
  }
  // MXN: the masked stratum is X < 0, whose mean is negative.
  const double vxx = (kPi - 2.0) / kPi;
  return xymxmFill(spec.rho, spec.p, -kSqrt2OverPi, vxx);
}

Dataset sample_dataset(const PopulationSpec &spec, std::size_t n,
                       Stream &rng) {
  Dataset ds;
  ds.x.resize(n);
  ds.y.resize(n);
  ds.missing.resize(n);
  const double slope = spec.rho;
  const double resid_sd = std::sqrt(1.0 - spec.rho * spec.rho);
  for (std::size_t i = 0; i < n; ++i) {
    ds.x[i] = rng.normal();
    ds.y[i] = slope * ds.x[i] + resid_sd * rng.normal();
  }
  if (spec.pattern == Pattern::MXN) {
    for (std::size_t i = 0; i < n; ++i) ds.missing[i] = ds.x[i] < 0.0;
  } else {
    for (std::size_t i = 0; i < n; ++i) ds.missing[i] = rng.uniform() < spec.p;
  }
  return ds;
}

}  // namespace miml
