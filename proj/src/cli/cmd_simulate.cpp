#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "commands.hpp"
#include "io_util.hpp"
#include "json.hpp"
#include "miml/sim_harness.hpp"

namespace miml::cli {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json &obj, const std::set<std::string> &known,
                         const std::string &where) {
  for (const auto &item : obj.items()) {
    if (known.find(item.key()) == known.end()) {
      throw UsageError("config: unknown key '" + item.key() + "' in " +
                       where);
    }
  }
}

Pattern parse_pattern(const std::string &s) {
  if (s == "mcar") return Pattern::MCAR;
  if (s == "mxn") return Pattern::MXN;
  throw UsageError("config: pattern must be 'mcar' or 'mxn', got '" + s +
                   "'");
}

EstimatorSpec parse_estimator(const json &e) {
  reject_unknown_keys(e, {"kind", "D", "nu_prior", "label"}, "estimator");
  EstimatorSpec es;
  const std::string kind = e.at("kind").get<std::string>();
  if (kind == "ml") {
    es.kind = EstimatorKind::ML;
  } else if (kind == "mlmi") {
    es.kind = EstimatorKind::MLMI;
  } else if (kind == "pdmi") {
    es.kind = EstimatorKind::PDMI;
  } else {
    throw UsageError("config: estimator kind must be ml, mlmi, or pdmi");
  }
  es.D = e.value("D", 5);
  es.nu_prior = e.value("nu_prior", 0);
  es.label = e.value("label", std::string{});
  return es;
}

CiSpec parse_ci(const json &c) {
  reject_unknown_keys(c, {"kind", "estimator", "bounded", "label"},
                      "ci_method");
  CiSpec cs;
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "ml_normal") {
    cs.kind = CiKind::MlNormal;
  } else if (kind == "ml_t") {
    cs.kind = CiKind::MlT;
  } else if (kind == "ml_tstar") {
    cs.kind = CiKind::MlTStar;
  } else if (kind == "pdmi_t") {
    cs.kind = CiKind::PdmiT;
  } else {
    throw UsageError(
        "config: ci kind must be ml_normal, ml_t, ml_tstar, or pdmi_t");
  }
  cs.estimator_index = c.value("estimator", std::size_t{0});
  cs.bounded = c.value("bounded", false);
  cs.label = c.value("label", std::string{});
  return cs;
}

ExperimentConfig parse_config(const json &j) {
  reject_unknown_keys(j,
                      {"n", "pattern", "rho", "p", "level", "replications",
                       "seed", "workers", "estimators", "ci_methods"},
                      "the top level");
  ExperimentConfig cfg;
  cfg.n = j.at("n").get<int>();
  const double rho = j.value("rho", 0.5);
  const double p = j.value("p", 0.5);
  cfg.population = make_population_spec(
      rho, p, parse_pattern(j.at("pattern").get<std::string>()));
  cfg.level = j.value("level", 0.95);
  if (j.contains("replications")) {
    cfg.replications = j.at("replications").get<long>();
  }
  cfg.seed = j.value("seed", std::uint64_t{12345});
  cfg.workers = j.value("workers", 0);
  if (!j.contains("estimators") || !j.at("estimators").is_array() ||
      j.at("estimators").empty()) {
    throw UsageError("config: 'estimators' must be a non-empty array");
  }
  for (const auto &e : j.at("estimators")) {
    cfg.estimators.push_back(parse_estimator(e));
  }
  if (j.contains("ci_methods")) {
    for (const auto &c : j.at("ci_methods")) {
      cfg.ci_methods.push_back(parse_ci(c));
    }
  }
  return cfg;
}

}  // namespace

int cmd_simulate(const SimulateOptions &opts) {
  std::ifstream in(opts.config_path);
  if (!in) {
    throw UsageError("cannot open config file: " + opts.config_path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw UsageError("config: " + std::string(e.what()));
  }

  ExperimentConfig cfg;
  try {
    cfg = parse_config(j);
  } catch (const json::exception &e) {
    throw UsageError("config: " + std::string(e.what()));
  }
  if (opts.reps_given) cfg.replications = opts.reps;
  if (opts.seed_given) cfg.seed = opts.seed;
  if (opts.workers_given) cfg.workers = opts.workers;
  if (cfg.replications < 1) {
    throw UsageError(
        "config: 'replications' (or --reps) must be a positive integer");
  }

  const std::string started = now_utc_iso8601();
  SummaryTable table;
  try {
    table = run_experiment(cfg);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  const std::string finished = now_utc_iso8601();

  const std::string csv = summary_csv(table);
  const std::string text = summary_text(table);

  const std::string csv_path = opts.out_dir + "/summary.csv";
  const std::string txt_path = opts.out_dir + "/summary.txt";
  const std::string manifest_path = opts.out_dir + "/manifest.json";
  write_text_file(csv_path, csv);
  write_text_file(txt_path, text);

  json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "simulate";
  manifest["started_utc"] = started;
  manifest["finished_utc"] = finished;
  manifest["seed"] = cfg.seed;
  manifest["config"] = config_json(cfg);
  manifest["replications"] = table.replications;
  manifest["regenerations"] = table.regenerations;
  manifest["anomalies"] = table.anomalies;
  manifest["outputs"] = json::array({csv_path, txt_path});
  write_text_file(manifest_path, manifest.dump(2) + "\n");

  std::cout << (opts.format == "csv" ? csv : text);
  return 0;
}

}  // namespace miml::cli
