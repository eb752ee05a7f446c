#include "tegdet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tegdet/data.hpp"
#include "tegdet/detector.hpp"
#include "tegdet/error.hpp"
#include "tegdet/model_io.hpp"
#include "tegdet/results.hpp"
#include "tegdet/sweep.hpp"

namespace tegdet::cli {

namespace {

namespace fs = std::filesystem;

struct BuildArgs {
  std::string train;
  std::string metric;
  int n_bins = 30;
  int obs_per_epoch = 336;
  int alpha = 5;
  std::string model;
};

struct DetectArgs {
  std::string model;
  std::string test;
  std::string ground_truth = "none";
  std::string label;
  std::string out;
  int alpha = 0;
  bool no_timings = false;
};

struct SweepArgs {
  std::string config;
  std::vector<std::string> metrics;
  std::vector<int> n_bins;
  std::vector<int> obs_per_epoch;
  std::vector<int> alpha;
  std::string train;
  std::vector<std::string> tests;
  std::vector<std::string> ground_truths;
  std::string out;
  bool no_timings = false;
  bool grid = false;
  unsigned jobs = 1;
};

struct ReportArgs {
  std::string results;
  std::string out_dir;
};

std::string default_label(GroundTruth gt, const fs::path& path) {
  return gt == GroundTruth::None ? path.stem().string() : std::string(ground_truth_name(gt));
}

int cmd_build(const BuildArgs& a, std::ostream& out) {
  const DetectorParams params{parse_metric(a.metric), a.n_bins, a.obs_per_epoch, a.alpha};
  params.validate();
  const auto train = load_dataset(a.train);
  const Model model = build_model(train, params);
  save_model(model, a.model);
  out << "Model written to " << a.model << " (" << model.baseline.size() << " training epochs)\n"
      << "Time to build the model:\t" << format_real(model.time_to_build) << " seconds\n";
  return kSuccess;
}

int cmd_detect(const DetectArgs& a, const CLI::App& app, std::ostream& out) {
  Model model = load_model(a.model);
  if (app.count("--alpha") > 0) {
    model.params.alpha = a.alpha;
    model.params.validate();
  }
  const auto gt = parse_ground_truth(a.ground_truth);
  const auto test = load_dataset(a.test);
  const auto outcome = predict(model, test);

  ResultsRow row{std::string(metric_name(model.params.metric)),
                 model.params.n_bins,
                 model.params.n_obs_per_period,
                 model.params.alpha,
                 a.label.empty() ? default_label(gt, a.test) : a.label,
                 a.no_timings ? 0.0 : model.time_to_build,
                 a.no_timings ? 0.0 : outcome.time_to_predict,
                 std::nullopt};
  if (gt != GroundTruth::None) {
    row.cm = compute_confusion_matrix(ground_truth_vector(gt, outcome.n_periods), outcome.outliers);
  }

  out << format_detection_report(row);
  out << "Outliers:\t\t\t[";
  for (std::size_t j = 0; j < outcome.outliers.size(); ++j) {
    out << (j ? ", " : "") << outcome.outliers[j];
  }
  out << "]\n";
  if (!a.out.empty()) append_results(a.out, {row});
  return kSuccess;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  if (!a.config.empty()) cfg = load_sweep_config(a.config);
  if (a.grid) {
    cfg.n_bins = default_n_bins_grid();
    cfg.n_obs_per_period = default_obs_per_period_grid();
    cfg.alpha = default_alpha_grid();
  }

  if (!a.metrics.empty()) {
    cfg.metrics.clear();
    for (const auto& m : a.metrics) {
      if (m == "all") {
        for (const auto& info : metric_registry()) cfg.metrics.push_back(info.id);
      } else {
        cfg.metrics.push_back(parse_metric(m));
      }
    }
  }
  if (!a.n_bins.empty()) cfg.n_bins = a.n_bins;
  if (!a.obs_per_epoch.empty()) cfg.n_obs_per_period = a.obs_per_epoch;
  if (!a.alpha.empty()) cfg.alpha = a.alpha;
  if (!a.train.empty()) cfg.train = a.train;
  if (!a.tests.empty()) {
    if (!a.ground_truths.empty() && a.ground_truths.size() != a.tests.size()) {
      throw InvalidArgument("give one --ground-truth per --test (or none at all)");
    }
    cfg.tests.clear();
    for (std::size_t i = 0; i < a.tests.size(); ++i) {
      TestingSet set;
      set.path = a.tests[i];
      set.ground_truth = a.ground_truths.empty() ? GroundTruth::None : parse_ground_truth(a.ground_truths[i]);
      set.label = default_label(set.ground_truth, set.path);
      cfg.tests.push_back(std::move(set));
    }
  } else if (!a.ground_truths.empty()) {
    throw InvalidArgument("--ground-truth needs matching --test options");
  }
  cfg.validate();

  const auto result = run_sweep(cfg, a.jobs, a.no_timings);
  append_results(a.out, result.rows);
  out << "Wrote " << result.rows.size() << " rows to " << a.out << '\n';
  for (const auto& f : result.failures) {
    err << "sweep: " << f.detector << " n_bins=" << f.n_bins << " n_obs_per_period="
        << f.n_obs_per_period << " alpha=" << f.alpha << " failed: " << f.message << '\n';
  }
  return result.failures.empty() ? kSuccess : kDataError;
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const auto rows = read_results(a.results);

  std::vector<double> build, pred;
  for (const auto& r : rows) {
    build.push_back(r.time2build * 1e3);
    pred.push_back(r.time2predict * 1e3);
  }
  const auto b = summarize(build);
  const auto p = summarize(pred);
  out << "Execution times (ms) over " << rows.size() << " rows\n"
      << std::left << std::setw(12) << "statistic" << std::setw(24) << "time to build"
      << "time to predict\n";
  auto line = [&](const char* name, double x, double y) {
    out << std::setw(12) << name << std::setw(24) << format_real(x) << format_real(y) << '\n';
  };
  line("mean", b.mean, p.mean);
  line("std", b.std, p.std);
  line("min", b.min, p.min);
  line("max", b.max, p.max);

  const auto acc = accuracy_by_detector(rows);
  out << "\nAccuracy per detector\n";
  for (const auto& d : acc) {
    out << std::setw(20) << d.detector << std::fixed << std::setprecision(4) << d.accuracy
        << std::defaultfloat << "  (tp=" << d.cm.tp << " tn=" << d.cm.tn << " fp=" << d.cm.fp
        << " fn=" << d.cm.fn << ")\n";
  }
  if (acc.empty()) out << "(no labelled rows)\n";
  out << std::right;

  if (!a.out_dir.empty()) {
    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    {
      std::ofstream f(dir / "accuracy_by_detector.csv");
      if (!f) throw DataError((dir / "accuracy_by_detector.csv").string() + ": cannot write");
      f << "detector,tp,tn,fp,fn,accuracy\n";
      for (const auto& d : acc) {
        f << d.detector << ',' << d.cm.tp << ',' << d.cm.tn << ',' << d.cm.fp << ',' << d.cm.fn
          << ',' << format_real(d.accuracy) << '\n';
      }
    }
    {
      std::ofstream f(dir / "params_summary.csv");
      if (!f) throw DataError((dir / "params_summary.csv").string() + ": cannot write");
      f << "detector,n_bins,n_obs_per_period,alpha,mean_time2build,mean_time2predict,accuracy\n";
      for (const auto& c : summarize_by_params(rows)) {
        f << c.detector << ',' << c.n_bins << ',' << c.n_obs_per_period << ',' << c.alpha << ','
          << format_real(c.mean_time2build) << ',' << format_real(c.mean_time2predict) << ','
          << (c.accuracy ? format_real(*c.accuracy) : std::string()) << '\n';
      }
    }
    out << "\nPlot tables written to " << dir.string() << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-evolving graph anomaly detection for univariate time series", "tegdet"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a prediction model from a training series");
  build_cmd->add_option("--train", build.train, "Training CSV (timestamp,value)")->required();
  build_cmd->add_option("--metric", build.metric, "Dissimilarity metric")->required();
  build_cmd->add_option("--n-bins", build.n_bins, "Number of discretization levels")->capture_default_str();
  build_cmd->add_option("--obs-per-epoch", build.obs_per_epoch, "Observations per epoch")->capture_default_str();
  build_cmd->add_option("--alpha", build.alpha, "Significance level in (0,100)")->capture_default_str();
  build_cmd->add_option("--model", build.model, "Output model file")->required();

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Detect anomalous epochs in a testing series");
  detect_cmd->add_option("--model", detect.model, "Model file written by 'build'")->required();
  detect_cmd->add_option("--test", detect.test, "Testing CSV (timestamp,value)")->required();
  detect_cmd->add_option("--ground-truth", detect.ground_truth, "normal, anomalous or none")
      ->check(CLI::IsMember({"normal", "anomalous", "none"}))
      ->capture_default_str();
  detect_cmd->add_option("--label", detect.label, "Testing-set label (default: ground truth or file stem)");
  detect_cmd->add_option("--alpha", detect.alpha, "Override the model's significance level");
  detect_cmd->add_option("--out", detect.out, "Results CSV to append to");
  detect_cmd->add_flag("--no-timings", detect.no_timings, "Write zero timings");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate metric x parameter combinations");
  sweep_cmd->add_option("--config", sweep.config, "JSON sweep description; flags override it");
  sweep_cmd->add_option("--metric", sweep.metrics, "Metric name or 'all' (repeatable)");
  sweep_cmd->add_option("--n-bins", sweep.n_bins, "Levels of discretization (repeatable)");
  sweep_cmd->add_option("--obs-per-epoch", sweep.obs_per_epoch, "Observations per epoch (repeatable)");
  sweep_cmd->add_option("--alpha", sweep.alpha, "Significance levels (repeatable)");
  sweep_cmd->add_flag("--grid", sweep.grid, "Use the ten-value sensitivity grids for all three parameters");
  sweep_cmd->add_option("--train", sweep.train, "Training CSV");
  sweep_cmd->add_option("--test", sweep.tests, "Testing CSV (repeatable)");
  sweep_cmd->add_option("--ground-truth", sweep.ground_truths, "Label per --test: normal, anomalous or none");
  sweep_cmd->add_option("--out", sweep.out, "Results CSV to append to")->required();
  sweep_cmd->add_option("--jobs", sweep.jobs, "Parallel workers")->capture_default_str();
  sweep_cmd->add_flag("--no-timings", sweep.no_timings, "Write zero timings");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Summarize a results CSV");
  report_cmd->add_option("results,--results", report.results, "Results CSV")->required();
  report_cmd->add_option("--out", report.out_dir, "Directory for plot-ready CSV tables");

  auto* metrics_cmd = app.add_subcommand("metrics", "List the available dissimilarity metrics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*build_cmd) return cmd_build(build, out);
    if (*detect_cmd) return cmd_detect(detect, *detect_cmd, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*report_cmd) return cmd_report(report, out);
    if (*metrics_cmd) {
      for (const auto& name : list_metrics()) out << name << '\n';
      return kSuccess;
    }
  } catch (const InvalidArgument& e) {
    err << "tegdet: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "tegdet: data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "tegdet: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace tegdet::cli
