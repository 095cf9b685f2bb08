#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "io_util.hpp"
#include "published_values.hpp"
#include "json.hpp"
#include "miml/sim_harness.hpp"

namespace miml::cli {
namespace {

EstimatorSpec make_ml() { return EstimatorSpec{EstimatorKind::ML, 1, 0, ""}; }
EstimatorSpec make_mlmi(int D) {
  return EstimatorSpec{EstimatorKind::MLMI, D, 0, ""};
}
EstimatorSpec make_pdmi(int D, int nu) {
  return EstimatorSpec{EstimatorKind::PDMI, D, nu, ""};
}

// Row key used to look a result row up in the published data.
std::string row_key(const EstimatorSpec &es) {
  switch (es.kind) {
    case EstimatorKind::ML:
      return "ML";
    case EstimatorKind::MLMI:
      return "MLMI";
    case EstimatorKind::PDMI:
      return "PDMI(" + std::to_string(es.nu_prior) + ")";
  }
  return "?";
}

std::string fmt3(double v) {
  char buf[32];
  if (std::isnan(v)) return "nan";
  if (v != 0.0 && (std::abs(v) >= 1e4 || std::abs(v) < 1e-3)) {
    std::snprintf(buf, sizeof(buf), "%.3g", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.3f", v);
  }
  return buf;
}

std::string fmtg(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string pad(const std::string &s, std::size_t w) {
  return s.size() >= w ? s + "  " : s + std::string(w - s.size(), ' ');
}

struct Row {
  std::string label;
  std::array<std::string, kEstimandCount> ours;
  std::array<std::string, kEstimandCount> pub;
};

void emit_block(std::ostringstream &text, const std::string &title,
                const std::vector<Row> &rows) {
  constexpr std::size_t kLabelW = 26;
  constexpr std::size_t kCellW = 15;
  text << title << '\n';
  text << pad("", kLabelW);
  for (std::string_view name : kEstimandNames)
    text << pad(std::string(name), kCellW);
  text << '\n';
  for (const Row &row : rows) {
    text << pad(row.label, kLabelW);
    for (const auto &cell : row.ours) text << pad(cell, kCellW);
    text << '\n';
    text << pad("  published", kLabelW);
    for (const auto &cell : row.pub) text << pad(cell, kCellW);
    text << '\n';
  }
  text << '\n';
}

void csv_pair_rows(std::ostringstream &csv, const std::string &table, int n,
                   const std::string &pattern, const std::string &row,
                   const char *stat_a, const double *ours_a,
                   const double *pub_a, const char *stat_b,
                   const double *ours_b, const double *pub_b) {
  for (int k = 0; k < kEstimandCount; ++k) {
    csv << table << ',' << n << ',' << pattern << ',' << row << ','
        << kEstimandNames[k] << ',' << stat_a << ',' << format_g17(ours_a[k])
        << ',' << (pub_a ? fmtg(pub_a[k]) : std::string{}) << '\n';
    csv << table << ',' << n << ',' << pattern << ',' << row << ','
        << kEstimandNames[k] << ',' << stat_b << ',' << format_g17(ours_b[k])
        << ',' << (pub_b ? fmtg(pub_b[k]) : std::string{}) << '\n';
  }
}

}  // namespace

int cmd_reproduce(const ReproduceOptions &opts) {
  if (opts.reps != 0 && opts.reps < 100) {
    throw UsageError("--reps must be at least 100");
  }
  const std::string &table_id = opts.table;

  std::vector<EstimatorSpec> estimators;
  std::vector<CiSpec> cis;
  if (table_id == "table1") {
    estimators = {make_ml(), make_mlmi(5), make_pdmi(5, 0)};
  } else if (table_id == "table2") {
    estimators = {make_pdmi(5, -2), make_pdmi(5, 0), make_pdmi(5, 2),
                  make_pdmi(5, 7)};
  } else if (table_id == "table3") {
    estimators = {make_ml(),      make_mlmi(5),    make_pdmi(5, -2),
                  make_pdmi(5, 0), make_pdmi(5, 2), make_pdmi(5, 7)};
  } else {  // table4 / table5
    estimators = {make_ml(), make_pdmi(5, -2), make_pdmi(5, 0),
                  make_pdmi(5, 2), make_pdmi(5, 7)};
    const bool bounded = (table_id == "table5");
    CiSpec ml_ci;
    ml_ci.kind = bounded ? CiKind::MlTStar : CiKind::MlNormal;
    ml_ci.bounded = bounded;
    cis.push_back(ml_ci);
    for (std::size_t i = 1; i <= 4; ++i) {
      CiSpec cs;
      cs.kind = CiKind::PdmiT;
      cs.estimator_index = i;
      cs.bounded = bounded;
      cis.push_back(cs);
    }
  }

  const bool interval_table = !cis.empty();
  const auto default_reps = [&](int n) -> long {
    if (interval_table) return 8000;
    return n == 25 ? 40000 : 20000;
  };

  const std::string started = now_utc_iso8601();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "table,n,pattern,row,estimand,statistic,ours,published\n";
  nlohmann::json runs = nlohmann::json::array();

  if (table_id == "table3") {
    text << "size statistic = sqrt(mean^2 + sd^2) with its rank; "
            "rmse-based values and ranks are in the CSV\n\n";
  }

  const std::pair<int, Pattern> cells[] = {{25, Pattern::MXN},
                                           {25, Pattern::MCAR},
                                           {100, Pattern::MXN},
                                           {100, Pattern::MCAR}};
  std::uint64_t cell_index = 0;
  long total_regen = 0;
  long total_anom = 0;
  for (const auto &[n, pattern] : cells) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.population = make_population_spec(0.5, 0.5, pattern);
    cfg.estimators = estimators;
    cfg.ci_methods = cis;
    cfg.replications = opts.reps != 0 ? opts.reps : default_reps(n);
    cfg.seed = opts.seed + cell_index;
    cfg.workers = opts.workers;
    ++cell_index;

    const SummaryTable result = run_experiment(cfg);
    total_regen += result.regenerations;
    total_anom += result.anomalies;

    const std::string pat = pattern_name(pattern);
    std::ostringstream title;
    title << "=== " << table_id << ": n=" << n << " pattern=" << pat
          << " replications=" << result.replications << " seed=" << cfg.seed
          << " regenerations=" << result.regenerations << " ===";

    std::vector<Row> rows;
    if (!interval_table) {
      for (std::size_t i = 0; i < estimators.size(); ++i) {
        const std::string key = row_key(estimators[i]);
        const PubCell *pub = find_published(table_id, key, n, pat);
        Row row;
        row.label = key;
        std::array<double, kEstimandCount> oa{}, ob{};
        for (int k = 0; k < kEstimandCount; ++k) {
          const PointSummary &ps =
              result.points[i][static_cast<std::size_t>(k)];
          if (table_id == "table3") {
            oa[k] = ps.rms;
            ob[k] = ps.rank_rms;
            row.ours[k] = fmt3(ps.rms) + " (" +
                          std::to_string(ps.rank_rms) + ")";
            if (pub) {
              row.pub[k] = fmtg(pub->a[k]) + " (" +
                           std::to_string(static_cast<int>(pub->b[k])) + ")";
            }
          } else {
            oa[k] = ps.mean;
            ob[k] = ps.sd;
            row.ours[k] = fmt3(ps.mean) + " (" + fmt3(ps.sd) + ")";
            if (pub) {
              row.pub[k] = fmtg(pub->a[k]) + " (" + fmtg(pub->b[k]) + ")";
            }
          }
        }
        if (table_id == "table3") {
          csv_pair_rows(csv, table_id, n, pat, key, "rms", oa.data(),
                        pub ? pub->a : nullptr, "rank_rms", ob.data(),
                        pub ? pub->b : nullptr);
          std::array<double, kEstimandCount> ra{}, rb{};
          for (int k = 0; k < kEstimandCount; ++k) {
            ra[k] = result.points[i][static_cast<std::size_t>(k)].rmse;
            rb[k] = result.points[i][static_cast<std::size_t>(k)].rank_rmse;
          }
          csv_pair_rows(csv, table_id, n, pat, key, "rmse", ra.data(),
                        nullptr, "rank_rmse", rb.data(), nullptr);
        } else {
          csv_pair_rows(csv, table_id, n, pat, key, "mean", oa.data(),
                        pub ? pub->a : nullptr, "sd", ob.data(),
                        pub ? pub->b : nullptr);
        }
        rows.push_back(std::move(row));
      }
    } else {
      for (std::size_t c = 0; c < cis.size(); ++c) {
        const CiSpec &cs = cis[c];
        const std::string key = (cs.kind == CiKind::PdmiT)
                                    ? row_key(estimators[cs.estimator_index])
                                    : std::string("ML");
        const PubCell *pub = find_published(table_id, key, n, pat);
        Row row;
        row.label = key;
        std::array<double, kEstimandCount> oa{}, ob{};
        for (int k = 0; k < kEstimandCount; ++k) {
          const IntervalSummary &is =
              result.intervals[c][static_cast<std::size_t>(k)];
          oa[k] = is.mean_length;
          ob[k] = is.coverage * 100.0;
          char buf[48];
          std::snprintf(buf, sizeof(buf), "%.3g (%.1f%%)", is.mean_length,
                        is.coverage * 100.0);
          row.ours[k] = buf;
          if (pub) {
            char pbuf[48];
            std::snprintf(pbuf, sizeof(pbuf), "%.3g (%.0f%%)", pub->a[k],
                          pub->b[k]);
            row.pub[k] = pbuf;
          }
        }
        csv_pair_rows(csv, table_id, n, pat, key, "mean_length", oa.data(),
                      pub ? pub->a : nullptr, "coverage_pct", ob.data(),
                      pub ? pub->b : nullptr);
        rows.push_back(std::move(row));
      }
    }
    emit_block(text, title.str(), rows);

    nlohmann::json run = config_json(cfg);
    run["replications_done"] = result.replications;
    run["regenerations"] = result.regenerations;
    run["anomalies"] = result.anomalies;
    runs.push_back(run);
  }

  const std::string finished = now_utc_iso8601();
  const std::string csv_path = opts.out_dir + "/" + table_id + "_comparison.csv";
  const std::string txt_path = opts.out_dir + "/" + table_id + "_comparison.txt";
  const std::string manifest_path = opts.out_dir + "/manifest.json";
  write_text_file(csv_path, csv.str());
  write_text_file(txt_path, text.str());

  nlohmann::json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "reproduce";
  manifest["table"] = table_id;
  manifest["started_utc"] = started;
  manifest["finished_utc"] = finished;
  manifest["seed"] = opts.seed;
  manifest["runs"] = runs;
  manifest["regenerations"] = total_regen;
  manifest["anomalies"] = total_anom;
  manifest["outputs"] = nlohmann::json::array({csv_path, txt_path});
  write_text_file(manifest_path, manifest.dump(2) + "\n");

  std::cout << (opts.format == "csv" ? csv.str() : text.str());
  return 0;
}

}  // namespace miml::cli
