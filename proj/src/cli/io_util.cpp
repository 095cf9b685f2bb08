#include "io_util.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace miml::cli {
namespace {

std::string trim(const std::string &s) {
  const char *ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string &field, std::size_t line_no,
                    const char *column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return v;
  } catch (const std::exception &) {
    throw UsageError("line " + std::to_string(line_no) + ": cell '" + field +
                     "' in column " + column + " is not a number");
  }
}

}  // namespace

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string now_utc_iso8601() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Dataset read_xy_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open dataset file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw UsageError(path + ": empty file (expected header 'x,y')");
  }
  if (trim(line) != "x,y") {
    throw UsageError(path + ": first line must be the header 'x,y'");
  }

  Dataset ds;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw UsageError(path + ": line " + std::to_string(line_no) +
                       " must have exactly two comma-separated fields");
    }
    const std::string xf = trim(line.substr(0, comma));
    const std::string yf = trim(line.substr(comma + 1));
    if (xf.empty()) {
      throw UsageError(path + ": line " + std::to_string(line_no) +
                       " has a missing x value; only Y may be missing");
    }
    ds.x.push_back(parse_number(xf, line_no, "x"));
    if (yf.empty()) {
      ds.y.push_back(0.0);
      ds.missing.push_back(true);
    } else {
      ds.y.push_back(parse_number(yf, line_no, "y"));
      ds.missing.push_back(false);
    }
  }
  if (ds.x.empty()) {
    throw UsageError(path + ": no data rows");
  }
  return ds;
}

void write_text_file(const std::string &path, const std::string &content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " + p.parent_path().string() +
                    ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("failed while writing " + path);
  }
}

std::string estimator_label(const EstimatorSpec &es) {
  if (!es.label.empty()) return es.label;
  switch (es.kind) {
    case EstimatorKind::ML:
      return "ML";
    case EstimatorKind::MLMI:
      return "MLMI(D=" + std::to_string(es.D) + ")";
    case EstimatorKind::PDMI:
      return "PDMI(D=" + std::to_string(es.D) +
             ",nu=" + std::to_string(es.nu_prior) + ")";
  }
  return "?";
}

std::string ci_label(const CiSpec &cs, const ExperimentConfig &config) {
  if (!cs.label.empty()) return cs.label;
  std::string base;
  switch (cs.kind) {
    case CiKind::MlNormal:
      base = "ML normal";
      break;
    case CiKind::MlT:
      base = "ML t";
      break;
    case CiKind::MlTStar:
      base = "ML t*";
      break;
    case CiKind::PdmiT:
      base = "pooled t " +
             estimator_label(config.estimators[cs.estimator_index]);
      break;
  }
  if (cs.bounded) base += " bounded";
  return base;
}

std::string pattern_name(Pattern pattern) {
  return pattern == Pattern::MXN ? "mxn" : "mcar";
}

namespace {

void csv_row(std::ostringstream &os, const std::string &section,
             const std::string &label, const std::string &statistic,
             const std::array<double, kEstimandCount> &vals, bool integral) {
  os << section << ',' << label << ',' << statistic;
  for (const double v : vals) {
    os << ',';
    if (integral) {
      os << static_cast<long>(v);
    } else {
      os << format_g17(v);
    }
  }
  os << '\n';
}

}  // namespace

std::string summary_csv(const SummaryTable &table) {
  std::ostringstream os;
  os << "section,label,statistic";
  for (std::string_view name : kEstimandNames) {
    os << ',' << name;
  }
  os << '\n';

  std::array<double, kEstimandCount> vals{};
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    const std::string label = estimator_label(table.config.estimators[i]);
    const auto stat = [&](auto getter, const char *name, bool integral) {
      for (int k = 0; k < kEstimandCount; ++k) {
        vals[static_cast<std::size_t>(k)] =
            getter(table.points[i][static_cast<std::size_t>(k)]);
      }
      csv_row(os, "points", label, name, vals, integral);
    };
    stat([](const PointSummary &p) { return p.mean; }, "mean", false);
    stat([](const PointSummary &p) { return p.sd; }, "sd", false);
    stat([](const PointSummary &p) { return p.rmse; }, "rmse", false);
    stat([](const PointSummary &p) { return p.rms; }, "rms", false);
    stat([](const PointSummary &p) { return double(p.rank_rmse); },
         "rank_rmse", true);
    stat([](const PointSummary &p) { return double(p.rank_rms); }, "rank_rms",
         true);
  }
  for (std::size_t c = 0; c < table.intervals.size(); ++c) {
    const std::string label = ci_label(table.config.ci_methods[c], table.config);
    for (int k = 0; k < kEstimandCount; ++k) {
      vals[static_cast<std::size_t>(k)] =
          table.intervals[c][static_cast<std::size_t>(k)].mean_length;
    }
    csv_row(os, "intervals", label, "mean_length", vals, false);
    for (int k = 0; k < kEstimandCount; ++k) {
      vals[static_cast<std::size_t>(k)] =
          table.intervals[c][static_cast<std::size_t>(k)].coverage;
    }
    csv_row(os, "intervals", label, "coverage", vals, false);
    for (int k = 0; k < kEstimandCount; ++k) {
      vals[static_cast<std::size_t>(k)] = static_cast<double>(
          table.intervals[c][static_cast<std::size_t>(k)].valid);
    }
    csv_row(os, "intervals", label, "valid", vals, true);
  }

  os << "meta,experiment,replications," << table.replications << ",,,,,,,,\n";
  os << "meta,experiment,regenerations," << table.regenerations
     << ",,,,,,,,\n";
  os << "meta,experiment,anomalies," << table.anomalies << ",,,,,,,,\n";
  return os.str();
}

namespace {

std::string fixed3(double v) {
  if (std::isnan(v)) return "nan";
  if (std::abs(v) >= 1e4) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string pad(const std::string &s, std::size_t w) {
  return s.size() >= w ? s + "  " : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string summary_text(const SummaryTable &table) {
  const ExperimentConfig &cfg = table.config;
  std::ostringstream os;
  os << "n=" << cfg.n << " pattern=" << pattern_name(cfg.population.pattern)
     << " rho=" << format_g6(cfg.population.rho)
     << " p=" << format_g6(cfg.population.p)
     << " level=" << format_g6(cfg.level)
     << " replications=" << table.replications << " seed=" << cfg.seed
     << "\nregenerations=" << table.regenerations
     << " anomalies=" << table.anomalies << "\n\n";

  constexpr std::size_t kLabelW = 22;
  constexpr std::size_t kCellW = 16;

  const auto header = [&]() {
    os << pad("", kLabelW);
    for (std::string_view name : kEstimandNames) {
      os << pad(std::string(name), kCellW);
    }
    os << '\n';
  };

  if (!table.points.empty()) {
    os << "point estimates: mean (sd), then rmse (rank) and size (rank)\n";
    header();
    for (std::size_t i = 0; i < table.points.size(); ++i) {
      const std::string label = estimator_label(cfg.estimators[i]);
      os << pad(label, kLabelW);
      for (const auto &ps : table.points[i]) {
        os << pad(fixed3(ps.mean) + " (" + fixed3(ps.sd) + ")", kCellW);
      }
      os << '\n';
      os << pad("  rmse", kLabelW);
      for (const auto &ps : table.points[i]) {
        os << pad(fixed3(ps.rmse) + " (" + std::to_string(ps.rank_rmse) + ")",
                  kCellW);
      }
      os << '\n';
      os << pad("  size", kLabelW);
      for (const auto &ps : table.points[i]) {
        os << pad(fixed3(ps.rms) + " (" + std::to_string(ps.rank_rms) + ")",
                  kCellW);
      }
      os << '\n';
    }
    os << '\n';
  }

  if (!table.intervals.empty()) {
    os << "intervals: mean length (coverage %)\n";
    header();
    for (std::size_t c = 0; c < table.intervals.size(); ++c) {
      os << pad(ci_label(cfg.ci_methods[c], cfg), kLabelW);
      for (const auto &is : table.intervals[c]) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.3g (%.1f%%)", is.mean_length,
                      is.coverage * 100.0);
        os << pad(buf, kCellW);
      }
      os << '\n';
    }
  }
  return os.str();
}

nlohmann::json config_json(const ExperimentConfig &config) {
  nlohmann::json j;
  j["n"] = config.n;
  j["pattern"] = pattern_name(config.population.pattern);
  j["rho"] = config.population.rho;
  j["p"] = config.population.p;
  j["level"] = config.level;
  j["replications"] = config.replications;
  j["seed"] = config.seed;
  j["workers"] = config.workers;
  nlohmann::json est = nlohmann::json::array();
  for (const auto &es : config.estimators) {
    nlohmann::json e;
    switch (es.kind) {
      case EstimatorKind::ML:
        e["kind"] = "ml";
        break;
      case EstimatorKind::MLMI:
        e["kind"] = "mlmi";
        e["D"] = es.D;
        break;
      case EstimatorKind::PDMI:
        e["kind"] = "pdmi";
        e["D"] = es.D;
        e["nu_prior"] = es.nu_prior;
        break;
    }
    e["label"] = estimator_label(es);
    est.push_back(e);
  }
  j["estimators"] = est;
  nlohmann::json cis = nlohmann::json::array();
  for (const auto &cs : config.ci_methods) {
    nlohmann::json c;
    switch (cs.kind) {
      case CiKind::MlNormal:
        c["kind"] = "ml_normal";
        break;
      case CiKind::MlT:
        c["kind"] = "ml_t";
        break;
      case CiKind::MlTStar:
        c["kind"] = "ml_tstar";
        break;
      case CiKind::PdmiT:
        c["kind"] = "pdmi_t";
        c["estimator"] = cs.estimator_index;
        break;
    }
    c["bounded"] = cs.bounded;
    c["label"] = ci_label(cs, config);
    cis.push_back(c);
  }
  j["ci_methods"] = cis;
  return j;
}

}  // namespace miml::cli
