#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "io_util.hpp"
#include "miml/imputation.hpp"
#include "miml/inference.hpp"
#include "miml/ml_estimator.hpp"

namespace miml::cli {
namespace {

std::string fmt_df(double df) {
  if (std::isinf(df)) return "inf";
  return format_g6(df);
}

std::string fmt_df17(double df) {
  if (std::isinf(df)) return "inf";
  return format_g17(df);
}

struct ResultRow {
  double point = 0.0;
  double se = 0.0;
  double gamma = 0.0;
  double df = 0.0;
  bool has_interval = false;
  Interval interval;
  std::string note;  // set when the interval could not be formed
};

std::string render_text(const std::string &header,
                        const std::array<ResultRow, kEstimandCount> &rows,
                        double level) {
  std::ostringstream out;
  out << header << '\n';
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-10s %12s %12s %8s %9s  %s", "estimand",
                "point", "se", "gamma", "df",
                ("ci(" + format_g6(level) + ")").c_str());
  out << buf << '\n';
  for (int k = 0; k < kEstimandCount; ++k) {
    const ResultRow &r = rows[static_cast<std::size_t>(k)];
    std::string ci_text;
    if (r.has_interval) {
      ci_text = "[" + format_g6(r.interval.lo) + ", " +
                format_g6(r.interval.hi) + "]";
    } else {
      ci_text = "undefined (" + r.note + ")";
    }
    std::snprintf(buf, sizeof(buf), "%-10s %12s %12s %8s %9s  %s",
                  std::string(kEstimandNames[k]).c_str(),
                  format_g6(r.point).c_str(),
                  format_g6(r.se).c_str(), format_g6(r.gamma).c_str(),
                  fmt_df(r.df).c_str(), ci_text.c_str());
    out << buf << '\n';
  }
  return out.str();
}

std::string render_csv(const std::array<ResultRow, kEstimandCount> &rows) {
  std::ostringstream out;
  out << "estimand,point,se,gamma,df,ci_lo,ci_hi\n";
  for (int k = 0; k < kEstimandCount; ++k) {
    const ResultRow &r = rows[static_cast<std::size_t>(k)];
    out << kEstimandNames[k] << ',' << format_g17(r.point) << ','
        << format_g17(r.se) << ',' << format_g17(r.gamma) << ','
        << fmt_df17(r.df) << ',';
    if (r.has_interval) {
      out << format_g17(r.interval.lo) << ',' << format_g17(r.interval.hi);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

int cmd_estimate(const EstimateOptions &opts) {
  if (opts.method != "ml" && opts.ci_given) {
    throw UsageError(
        "--ci selects the ML interval rule; it does not apply to method '" +
        opts.method + "'");
  }
  if (opts.level <= 0.0 || opts.level >= 1.0) {
    throw UsageError("--level must be strictly between 0 and 1");
  }
  if (opts.D < 1) throw UsageError("--d must be at least 1");

  const Dataset dataset = read_xy_csv(opts.csv_path);

  MlFitResult fit;
  try {
    fit = estimate_ml(dataset);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("cannot fit this dataset: ") + e.what());
  }

  std::array<ResultRow, kEstimandCount> rows;
  std::ostringstream header;

  if (opts.method == "ml") {
    const InfoReport report = information_report(dataset, fit);
    MlCiMethod method = MlCiMethod::T;
    if (opts.ci == "normal") method = MlCiMethod::Normal;
    else if (opts.ci == "tstar") method = MlCiMethod::TStar;

    for (int k = 0; k < kEstimandCount; ++k) {
      const auto e = static_cast<Estimand>(k);
      ResultRow &r = rows[static_cast<std::size_t>(k)];
      r.point = fit.estimates[static_cast<std::size_t>(k)];
      r.se = report.se_obs[static_cast<std::size_t>(k)];
      r.gamma = report.gamma[static_cast<std::size_t>(k)];
      try {
        r.interval = ml_interval(fit, report, e, method, opts.bounded,
                                 opts.level);
        r.df = r.interval.df;
        r.has_interval = true;
      } catch (const std::domain_error &ex) {
        r.df = std::numeric_limits<double>::quiet_NaN();
        r.note = ex.what();
      }
    }
    header << "method=ml ci=" << opts.ci << (opts.bounded ? " bounded" : "")
           << " n=" << dataset.n() << " complete=" << dataset.n0();
  } else {
    ImputationConfig config;
    config.method = opts.method == "mlmi" ? ImputationMethod::MLMI
                                          : ImputationMethod::PDMI;
    config.D = opts.D;
    config.nu_prior = opts.nu_prior;
    StreamContext streams{opts.seed, 0};
    MIResult mi;
    try {
      mi = run_mi(dataset, config, streams);
    } catch (const std::domain_error &e) {
      throw UsageError(std::string("imputation failed: ") + e.what());
    } catch (const std::invalid_argument &e) {
      throw UsageError(std::string("imputation failed: ") + e.what());
    }

    for (int k = 0; k < kEstimandCount; ++k) {
      const auto e = static_cast<Estimand>(k);
      ResultRow &r = rows[static_cast<std::size_t>(k)];
      r.point = mi.point[static_cast<std::size_t>(k)];
      r.se = std::sqrt(mi.t_var[static_cast<std::size_t>(k)]);
      r.gamma = mi.gamma[static_cast<std::size_t>(k)];
      try {
        r.interval = pdmi_interval(mi, dataset.n(), e, opts.bounded,
                                   opts.level);
        r.df = r.interval.df;
        r.has_interval = true;
      } catch (const std::domain_error &ex) {
        r.df = std::numeric_limits<double>::quiet_NaN();
        r.note = ex.what();
      }
    }
    header << "method=" << opts.method << " D=" << opts.D;
    if (opts.method == "pdmi") header << " nu_prior=" << opts.nu_prior;
    header << (opts.bounded ? " bounded" : "") << " seed=" << opts.seed
           << " n=" << dataset.n() << " complete=" << dataset.n0();
  }

  if (opts.format == "csv") {
    std::cout << render_csv(rows);
  } else {
    std::cout << render_text(header.str(), rows, opts.level);
  }
  return 0;
}

}  // namespace miml::cli
