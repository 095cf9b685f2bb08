#include "miml/sim_harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "miml/ml_estimator.hpp"

namespace miml {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Neumaier-compensated running sum: the reduction gives the same bits no
// matter how the replications were partitioned across workers, because it
// always runs sequentially in replication order.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

void validate(const ExperimentConfig &config) {
  if (config.n < 3) {
    throw std::invalid_argument("sample size n must be at least 3");
  }
  if (config.replications < 1) {
    throw std::invalid_argument("replications must be at least 1");
  }
  if (!(config.level > 0.0 && config.level < 1.0)) {
    throw std::invalid_argument("confidence level must be inside (0, 1)");
  }
  if (config.estimators.empty()) {
    throw std::invalid_argument("at least one estimator is required");
  }
  // Re-run the population invariant checks.
  make_population_spec(config.population.rho, config.population.p,
                       config.population.pattern);
  for (const auto &es : config.estimators) {
    if (es.kind != EstimatorKind::ML && es.D < 1) {
      throw std::invalid_argument("imputation count D must be at least 1");
    }
  }
  for (const auto &cs : config.ci_methods) {
    if (cs.kind == CiKind::PdmiT) {
      if (cs.estimator_index >= config.estimators.size()) {
        throw std::invalid_argument(
            "interval method refers to an estimator index out of range");
      }
      if (config.estimators[cs.estimator_index].kind == EstimatorKind::ML) {
        throw std::invalid_argument(
            "pooled-imputation intervals need an imputation estimator");
      }
    }
  }
}

ReplicationRecord run_one(const ExperimentConfig &config,
                          const EstimateSet &truth, int threshold,
                          std::uint32_t r) {
  const std::size_t ne = config.estimators.size();
  const std::size_t nc = config.ci_methods.size();

  ReplicationRecord rec;
  rec.points.resize(ne);
  rec.length.assign(nc, {});
  rec.df.assign(nc, {});
  rec.covered.assign(nc, {});
  rec.valid.assign(nc, {});

  Dataset ds;
  MlFitResult fit;
  for (std::uint32_t attempt = 0;; ++attempt) {
    if (attempt >= 1000) {
      throw std::runtime_error(
          "replication failed to draw a usable dataset in 1000 attempts");
    }
    Stream dstream(config.seed, r, Purpose::Dataset, attempt);
    ds = sample_dataset(config.population, config.n, dstream);
    if (static_cast<int>(ds.n0()) < threshold) {
      ++rec.regenerated;
      continue;
    }
    try {
      fit = estimate_ml(ds);
    } catch (const std::exception &) {
      ++rec.regenerated;
      continue;
    }
    break;
  }

  // All estimators in a replication share the dataset and the posterior /
  // imputation substreams (common random numbers): marginal distributions
  // are untouched and method comparisons get sharper.
  const StreamContext streams{config.seed, r};
  std::vector<MIResult> mi(ne);
  for (std::size_t i = 0; i < ne; ++i) {
    const EstimatorSpec &es = config.estimators[i];
    if (es.kind == EstimatorKind::ML) {
      rec.points[i] = fit.estimates;
    } else {
      ImputationConfig ic;
      ic.method = (es.kind == EstimatorKind::MLMI) ? ImputationMethod::MLMI
                                                   : ImputationMethod::PDMI;
      ic.D = es.D;
      ic.nu_prior = es.nu_prior;
      mi[i] = run_mi(ds, ic, streams);
      rec.points[i] = mi[i].point;
    }
  }

  bool need_info = false;
  for (const auto &cs : config.ci_methods) {
    need_info = need_info || cs.kind != CiKind::PdmiT;
  }
  InfoReport report;
  if (need_info) {
    report = information_report(ds, fit);
  }

  for (std::size_t c = 0; c < nc; ++c) {
    const CiSpec &cs = config.ci_methods[c];
    for (int k = 0; k < kEstimandCount; ++k) {
      const auto e = static_cast<Estimand>(k);
      const auto ke = static_cast<std::size_t>(k);
      try {
        Interval iv;
        switch (cs.kind) {
          case CiKind::MlNormal:
            iv = ml_interval(fit, report, e, MlCiMethod::Normal, cs.bounded,
                             config.level);
            break;
          case CiKind::MlT:
            iv = ml_interval(fit, report, e, MlCiMethod::T, cs.bounded,
                             config.level);
            break;
          case CiKind::MlTStar:
            iv = ml_interval(fit, report, e, MlCiMethod::TStar, cs.bounded,
                             config.level);
            break;
          case CiKind::PdmiT:
            iv = pdmi_interval(mi[cs.estimator_index], config.n, e,
                               cs.bounded, config.level);
            break;
        }
        rec.length[c][ke] = iv.length();
        rec.df[c][ke] = iv.df;
        rec.covered[c][ke] =
            (truth.v[ke] >= iv.lo && truth.v[ke] <= iv.hi) ? 1 : 0;
        rec.valid[c][ke] = 1;
      } catch (const std::exception &) {
        rec.length[c][ke] = kNaN;
        rec.df[c][ke] = kNaN;
        rec.covered[c][ke] = 0;
        rec.valid[c][ke] = 0;
        ++rec.anomalies;
      }
    }
  }
  return rec;
}

// Ascending ranks over `score`, ties broken by position. Returns rank per
// position, values 1..k.
std::vector<int> ranks_of(const std::vector<double> &score) {
  std::vector<std::size_t> order(score.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (score[a] != score[b]) return score[a] < score[b];
                     return a < b;
                   });
  std::vector<int> rank(score.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    rank[order[pos]] = static_cast<int>(pos) + 1;
  }
  return rank;
}

}  // namespace

int min_complete_cases(const std::vector<EstimatorSpec> &estimators) {
  int threshold = 3;
  for (const auto &es : estimators) {
    if (es.kind != EstimatorKind::PDMI) continue;
    const int nu = es.nu_prior;
    const int req = (nu >= 0) ? std::max(3, 5 - nu) : std::max(3, 3 - nu);
    threshold = std::max(threshold, req);
  }
  return threshold;
}

void summarize_points(const std::vector<ReplicationRecord> &records,
                      const EstimateSet &truth, SummaryTable &table) {
  const auto R = static_cast<long>(records.size());
  const std::size_t ne = records.empty() ? 0 : records.front().points.size();
  table.points.assign(ne, {});

  for (std::size_t i = 0; i < ne; ++i) {
    for (int k = 0; k < kEstimandCount; ++k) {
      const auto ke = static_cast<std::size_t>(k);
      Accumulator mean_acc;
      Accumulator sq_err_acc;
      for (const auto &rec : records) {
        const double v = rec.points[i].v[ke];
        mean_acc.add(v);
        const double err = v - truth.v[ke];
        sq_err_acc.add(err * err);
      }
      const double mean = mean_acc.value() / static_cast<double>(R);

      double sd = kNaN;
      if (R >= 2) {
        Accumulator dev_acc;
        for (const auto &rec : records) {
          const double d = rec.points[i].v[ke] - mean;
          dev_acc.add(d * d);
        }
        sd = std::sqrt(dev_acc.value() / static_cast<double>(R - 1));
      }

      PointSummary &ps = table.points[i][ke];
      ps.mean = mean;
      ps.sd = sd;
      ps.rmse = std::sqrt(sq_err_acc.value() / static_cast<double>(R));
      ps.rms = (R >= 2) ? std::sqrt(mean * mean + sd * sd) : std::abs(mean);
    }
  }

  for (int k = 0; k < kEstimandCount; ++k) {
    const auto ke = static_cast<std::size_t>(k);
    std::vector<double> by_rmse(ne), by_rms(ne);
    for (std::size_t i = 0; i < ne; ++i) {
      by_rmse[i] = table.points[i][ke].rmse;
      by_rms[i] = table.points[i][ke].rms;
    }
    const std::vector<int> r1 = ranks_of(by_rmse);
    const std::vector<int> r2 = ranks_of(by_rms);
    for (std::size_t i = 0; i < ne; ++i) {
      table.points[i][ke].rank_rmse = r1[i];
      table.points[i][ke].rank_rms = r2[i];
    }
  }
}

void summarize_intervals(const std::vector<ReplicationRecord> &records,
                         SummaryTable &table) {
  const std::size_t nc = records.empty() ? 0 : records.front().length.size();
  table.intervals.assign(nc, {});

  for (std::size_t c = 0; c < nc; ++c) {
    for (int k = 0; k < kEstimandCount; ++k) {
      const auto ke = static_cast<std::size_t>(k);
      Accumulator len_acc;
      long covered = 0;
      long valid = 0;
      for (const auto &rec : records) {
        if (!rec.valid[c][ke]) continue;
        ++valid;
        len_acc.add(rec.length[c][ke]);
        covered += rec.covered[c][ke];
      }
      IntervalSummary &is = table.intervals[c][ke];
      is.valid = valid;
      if (valid > 0) {
        is.mean_length = len_acc.value() / static_cast<double>(valid);
        is.coverage = static_cast<double>(covered) / static_cast<double>(valid);
      } else {
        is.mean_length = kNaN;
        is.coverage = kNaN;
      }
    }
  }
}

SummaryTable run_experiment(const ExperimentConfig &config) {
  validate(config);

  const int threshold = min_complete_cases(config.estimators);
  const EstimateSet truth = true_values(config.population.rho);
  const long R = config.replications;

  std::vector<ReplicationRecord> records(static_cast<std::size_t>(R));

  long workers = config.workers > 0
                     ? config.workers
                     : static_cast<long>(std::max(
                           1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, R);

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (long w = 0; w < workers; ++w) {
    const long lo = w * R / workers;
    const long hi = (w + 1) * R / workers;
    pool.emplace_back([&, w, lo, hi]() {
      try {
        for (long r = lo; r < hi; ++r) {
          records[static_cast<std::size_t>(r)] =
              run_one(config, truth, threshold, static_cast<std::uint32_t>(r));
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto &t : pool) {
    t.join();
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SummaryTable table;
  table.config = config;
  table.replications = R;
  for (const auto &rec : records) {
    table.regenerations += rec.regenerated;
    table.anomalies += rec.anomalies;
  }
  summarize_points(records, truth, table);
  summarize_intervals(records, table);
  return table;
}

}  // namespace miml
