#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "miml/estimands.hpp"
#include "miml/imputation.hpp"
#include "miml/inference.hpp"
#include "miml/population.hpp"

namespace miml {

enum class EstimatorKind { ML, MLMI, PDMI };

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::ML;
  int D = 5;         // imputations; ignored for ML
  int nu_prior = 0;  // PDMI only
  std::string label;
};

enum class CiKind { MlNormal, MlT, MlTStar, PdmiT };

struct CiSpec {
  CiKind kind = CiKind::MlNormal;
  // Index into ExperimentConfig::estimators; used by PdmiT (which pools that
  // estimator's imputations) and ignored by the Ml* methods, which always
  // read the replication's ML fit.
  std::size_t estimator_index = 0;
  bool bounded = false;
  std::string label;
};

struct ExperimentConfig {
  int n = 25;
  PopulationSpec population;
  std::vector<EstimatorSpec> estimators;
  std::vector<CiSpec> ci_methods;
  double level = 0.95;
  long replications = 1;
  std::uint64_t seed = 12345;
  int workers = 0;  // 0 = one per hardware thread
};

// Everything retained from one replication.
struct ReplicationRecord {
  std::vector<EstimateSet> points;  // one per estimator
  // One entry per ci method; inner arrays indexed by estimand.
  std::vector<std::array<double, kEstimandCount>> length;
  std::vector<std::array<double, kEstimandCount>> df;
  std::vector<std::array<std::uint8_t, kEstimandCount>> covered;
  std::vector<std::array<std::uint8_t, kEstimandCount>> valid;
  int regenerated = 0;
  int anomalies = 0;
};

struct PointSummary {
  double mean = 0.0;
  double sd = 0.0;  // divisor R-1; NaN when R < 2
  // Root-mean-square deviation of the estimates from the true value.
  double rmse = 0.0;
  // Root of (mean^2 + sd^2): the size of the estimates about zero, the
  // statistic some published rank tables are built on.
  double rms = 0.0;
  int rank_rmse = 0;
  int rank_rms = 0;
};

struct IntervalSummary {
  double mean_length = 0.0;
  double coverage = 0.0;  // proportion in [0,1]
  long valid = 0;         // replications contributing (anomalies excluded)
};

struct SummaryTable {
  ExperimentConfig config;
  // points[estimator][estimand], intervals[ci_method][estimand].
  std::vector<std::array<PointSummary, kEstimandCount>> points;
  std::vector<std::array<IntervalSummary, kEstimandCount>> intervals;
  long replications = 0;
  long regenerations = 0;
  long anomalies = 0;
};

// Smallest complete-case count a dataset must have before the replication
// accepts it, given the estimators in play. Baseline 3 (fit the regression);
// a PDMI estimator with prior df nu >= 0 requires posterior df >= 3 so the
// posterior residual variance has a mean (n0 >= 5 - nu), while nu < 0
// requires only positive posterior df (n0 >= 3 - nu) so that the
// deliberately heavy-tailed draws stay in play.
int min_complete_cases(const std::vector<EstimatorSpec> &estimators);

// Mean/sd/rmse/rms and both rank columns for each estimator x estimand.
// truth supplies the reference values for rmse and coverage.
void summarize_points(const std::vector<ReplicationRecord> &records,
                      const EstimateSet &truth, SummaryTable &table);

// Mean interval length and coverage for each ci method x estimand. Extreme
// lengths are retained, never truncated.
void summarize_intervals(const std::vector<ReplicationRecord> &records,
                         SummaryTable &table);

// Runs the full experiment: deterministic given config.seed regardless of
// worker count. Replication r derives its streams from (seed, r); datasets
// with too few complete cases are resampled from a fresh substream within
// the replication and counted in the summary's regeneration total.
SummaryTable run_experiment(const ExperimentConfig &config);

}  // namespace miml
