#include "tegdet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "tegdet/data.hpp"
#include "tegdet/detector.hpp"
#include "tegdet/error.hpp"

namespace tegdet {

namespace {

struct Combination {
  Metric metric;
  int n_bins;
  int n_obs_per_period;
  int alpha;
};

struct CombinationOutcome {
  std::vector<ResultsRow> rows;
  std::optional<SweepFailure> failure;
};

CombinationOutcome evaluate(const Combination& c, const TimeSeries& train,
                            const std::vector<std::pair<TestingSet, TimeSeries>>& tests,
                            bool zero_timings) {
  CombinationOutcome out;
  const std::string name(metric_name(c.metric));
  try {
    const DetectorParams params{c.metric, c.n_bins, c.n_obs_per_period, c.alpha};
    const Model model = build_model(train, params);
    for (const auto& [set, series] : tests) {
      const auto outcome = predict(model, series);
      ResultsRow row{name, c.n_bins, c.n_obs_per_period, c.alpha, set.label,
                     zero_timings ? 0.0 : model.time_to_build,
                     zero_timings ? 0.0 : outcome.time_to_predict, std::nullopt};
      if (set.ground_truth != GroundTruth::None) {
        row.cm = compute_confusion_matrix(ground_truth_vector(set.ground_truth, outcome.n_periods),
                                          outcome.outliers);
      }
      out.rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    out.rows.clear();
    out.failure = SweepFailure{name, c.n_bins, c.n_obs_per_period, c.alpha, e.what()};
  }
  return out;
}

std::vector<int> int_list(const nlohmann::json& j, const char* key, std::vector<int> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_number_integer()) return {v.get<int>()};
  return v.get<std::vector<int>>();
}

}  // namespace

void SweepConfig::validate() const {
  if (metrics.empty()) throw InvalidArgument("sweep: metric list is empty");
  if (n_bins.empty() || n_obs_per_period.empty() || alpha.empty()) {
    throw InvalidArgument("sweep: every parameter list needs at least one value");
  }
  if (train.empty()) throw InvalidArgument("sweep: no training set given");
  if (tests.empty()) throw InvalidArgument("sweep: no testing set given");
  for (int b : n_bins) DetectorParams{metrics.front(), b, 1, 5}.validate();
  for (int s : n_obs_per_period) DetectorParams{metrics.front(), 1, s, 5}.validate();
  for (int a : alpha) DetectorParams{metrics.front(), 1, 1, a}.validate();
}

SweepResult run_sweep(const SweepConfig& config, unsigned jobs, bool zero_timings) {
  config.validate();
  const TimeSeries train = load_dataset(config.train);
  std::vector<std::pair<TestingSet, TimeSeries>> tests;
  tests.reserve(config.tests.size());
  for (const auto& t : config.tests) tests.emplace_back(t, load_dataset(t.path));

  std::vector<Combination> combos;
  for (Metric m : config.metrics) {
    for (int b : config.n_bins) {
      for (int s : config.n_obs_per_period) {
        for (int a : config.alpha) combos.push_back({m, b, s, a});
      }
    }
  }

  std::vector<CombinationOutcome> outcomes(combos.size());
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(combos.size(), 1)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < combos.size(); ++i) {
      outcomes[i] = evaluate(combos[i], train, tests, zero_timings);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < combos.size(); i = next++) {
          outcomes[i] = evaluate(combos[i], train, tests, zero_timings);
        }
      });
    }
  }

  SweepResult result;
  for (auto& o : outcomes) {
    std::move(o.rows.begin(), o.rows.end(), std::back_inserter(result.rows));
    if (o.failure) result.failures.push_back(std::move(*o.failure));
  }
  return result;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open sweep config");
  SweepConfig cfg;
  try {
    const auto j = nlohmann::json::parse(in);
    const auto base = path.parent_path();
    auto resolve = [&](const std::string& p) {
      const std::filesystem::path fp(p);
      return fp.is_absolute() ? fp : base / fp;
    };

    if (j.contains("metrics")) {
      const auto& m = j.at("metrics");
      if (m.is_string() && m.get<std::string>() == "all") {
        for (const auto& info : metric_registry()) cfg.metrics.push_back(info.id);
      } else {
        for (const auto& name : m.get<std::vector<std::string>>()) cfg.metrics.push_back(parse_metric(name));
      }
    }
    cfg.n_bins = int_list(j, "n_bins", cfg.n_bins);
    cfg.n_obs_per_period = int_list(j, "n_obs_per_period", cfg.n_obs_per_period);
    cfg.alpha = int_list(j, "alpha", cfg.alpha);
    if (j.contains("train")) cfg.train = resolve(j.at("train").get<std::string>());
    if (j.contains("tests")) {
      for (const auto& t : j.at("tests")) {
        TestingSet set;
        set.path = resolve(t.at("path").get<std::string>());
        set.ground_truth = parse_ground_truth(t.value("ground_truth", std::string("none")));
        set.label = t.value("label", set.ground_truth == GroundTruth::None
                                         ? set.path.stem().string()
                                         : std::string(ground_truth_name(set.ground_truth)));
        cfg.tests.push_back(std::move(set));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": invalid sweep config: " + e.what());
  }
  return cfg;
}

std::vector<int> default_obs_per_period_grid() { return {24, 48, 96, 168, 192, 336, 480, 672, 816, 1008}; }
std::vector<int> default_n_bins_grid() { return {5, 10, 15, 20, 25, 30, 35, 40, 45, 50}; }
std::vector<int> default_alpha_grid() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

}  // namespace tegdet
