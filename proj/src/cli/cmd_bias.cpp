#include <iostream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "io_util.hpp"
#include "miml/bias_oracle.hpp"

namespace miml::cli {

int cmd_bias(const BiasOptions &opts) {
  const Pattern pattern =
      opts.pattern == "mxn" ? Pattern::MXN : Pattern::MCAR;
  PopulationSpec spec;
  try {
    spec = make_population_spec(opts.rho, opts.p, pattern);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  const BiasMethod method =
      opts.method == "pdsi" ? BiasMethod::PDSI : BiasMethod::MLSI;

  std::ostringstream text;
  std::ostringstream csv;
  csv << "term,value\n";
  text << "bias prediction for the single-imputation variance of Y\n";
  text << "n=" << opts.n << " pattern=" << pattern_name(pattern)
       << " method=" << opts.method << " nu_prior=" << opts.nu_prior
       << " rho=" << format_g6(opts.rho) << " p=" << format_g6(opts.p)
       << (opts.exact_factor ? " exact-factor" : "") << '\n';

  try {
    const BiasReport report =
        bias_sigma2_y(spec, opts.n, method, opts.nu_prior, opts.exact_factor);
    text << "n0_effective: " << format_g6(report.n0_effective) << '\n';
    text << "quad_term:  " << format_g6(report.quad_term) << '\n';
    text << "resid_term: " << format_g6(report.resid_term) << '\n';
    text << "total:      " << format_g6(report.total) << '\n';
    csv << "n0_effective," << format_g17(report.n0_effective) << '\n';
    csv << "quad_term," << format_g17(report.quad_term) << '\n';
    csv << "resid_term," << format_g17(report.resid_term) << '\n';
    csv << "total," << format_g17(report.total) << '\n';
  } catch (const std::domain_error &e) {
    // The residual term has no finite mean here, but the coefficient-noise
    // term is still well defined; report it and mark the rest undefined.
    const double n0 = opts.n * (1.0 - spec.p);
    const Mat2 sab = var_beta_ml(spec, n0);
    const Mat2 smxm = sigma_mxm(spec);
    double factor = 1.0;
    if (method == BiasMethod::PDSI) {
      factor = 2.0;
      if (opts.exact_factor) {
        const double denom = n0 + opts.nu_prior - 4.0;
        if (denom > 0.0) factor = 1.0 + n0 / denom;
      }
    }
    const double quad =
        factor * (smxm[0][0] * sab[0][0] + smxm[0][1] * sab[1][0] +
                  smxm[1][0] * sab[0][1] + smxm[1][1] * sab[1][1]);
    text << "n0_effective: " << format_g6(n0) << '\n';
    text << "quad_term:  " << format_g6(quad) << '\n';
    text << "resid_term: undefined (" << e.what() << ")\n";
    text << "total:      undefined\n";
    csv << "n0_effective," << format_g17(n0) << '\n';
    csv << "quad_term," << format_g17(quad) << '\n';
    csv << "resid_term,undefined\n";
    csv << "total,undefined\n";
  }

  std::cout << (opts.format == "csv" ? csv.str() : text.str());
  return 0;
}

}  // namespace miml::cli
