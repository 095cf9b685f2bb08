#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "miml/population.hpp"
#include "miml/sim_harness.hpp"

namespace miml::cli {

inline constexpr const char *kVersion = "1.0.0";

// Thrown for bad flags, bad config files, or bad input data (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an output file cannot be written (exit code 3).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full-precision decimal form: round-trips to the same double.
std::string format_g17(double v);

// Shorter display form for rendered tables.
std::string format_g6(double v);

std::string now_utc_iso8601();

// Reads a dataset from a CSV file with header `x,y`. Missing Y cells are
// empty fields; any other token must parse as a number. A missing or
// unparseable X, a malformed row, or a missing file raises UsageError.
Dataset read_xy_csv(const std::string &path);

// Writes content to path, creating parent directories; IoError on failure.
void write_text_file(const std::string &path, const std::string &content);

// Human-readable labels (used when a spec carries none).
std::string estimator_label(const EstimatorSpec &es);
std::string ci_label(const CiSpec &cs, const ExperimentConfig &config);
std::string pattern_name(Pattern pattern);

// Machine-readable summary: one row per (section,label,statistic) with the
// nine estimand columns at 17 significant digits.
std::string summary_csv(const SummaryTable &table);

// Rendered plain-text table.
std::string summary_text(const SummaryTable &table);

// JSON echo of a resolved experiment configuration.
nlohmann::json config_json(const ExperimentConfig &config);

}  // namespace miml::cli
