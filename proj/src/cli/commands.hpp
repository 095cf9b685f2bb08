#pragma once

#include <cstdint>
#include <string>

namespace miml::cli {

struct SimulateOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "text";
  long reps = 0;  // 0 = take from config file
  bool reps_given = false;
  std::uint64_t seed = 12345;
  bool seed_given = false;
  int workers = 0;
  bool workers_given = false;
};

struct ReproduceOptions {
  std::string table;
  std::string out_dir = ".";
  std::string format = "text";
  long reps = 0;  // 0 = per-table default
  std::uint64_t seed = 12345;
  int workers = 0;
};

struct EstimateOptions {
  std::string csv_path;
  std::string method = "ml";
  int D = 5;
  int nu_prior = 0;
  std::string ci = "t";
  bool ci_given = false;
  bool bounded = false;
  double level = 0.95;
  std::string format = "text";
  std::uint64_t seed = 12345;
};

struct BiasOptions {
  int n = 25;
  std::string pattern;
  std::string method = "mlsi";
  int nu_prior = 0;
  double rho = 0.5;
  double p = 0.5;
  bool exact_factor = false;
  std::string format = "text";
};

int cmd_simulate(const SimulateOptions &opts);
int cmd_reproduce(const ReproduceOptions &opts);
int cmd_estimate(const EstimateOptions &opts);
int cmd_bias(const BiasOptions &opts);

}  // namespace miml::cli
