#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tegdet/metrics.hpp"
#include "tegdet/results.hpp"

namespace tegdet {

struct TestingSet {
  std::filesystem::path path;
  std::string label;
  GroundTruth ground_truth = GroundTruth::None;
};

struct SweepConfig {
  std::vector<Metric> metrics;
  std::vector<int> n_bins{30};
  std::vector<int> n_obs_per_period{336};
  std::vector<int> alpha{5};
  std::filesystem::path train;
  std::vector<TestingSet> tests;

  /// Throws InvalidArgument on empty lists or out-of-range values.
  void validate() const;
};

struct SweepFailure {
  std::string detector;
  int n_bins = 0;
  int n_obs_per_period = 0;
  int alpha = 0;
  std::string message;
};

struct SweepResult {
  std::vector<ResultsRow> rows;
  std::vector<SweepFailure> failures;
};

/// Builds one model per metric x n_bins x n_obs_per_period x alpha on the
/// training set and evaluates every testing set with it. Rows come out in
/// that nesting order regardless of `jobs`.
SweepResult run_sweep(const SweepConfig& config, unsigned jobs = 1, bool zero_timings = false);

/// Reads a JSON sweep description. Relative paths resolve against the file's
/// directory.
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Parameter grids of the sensitivity study (ten values each).
std::vector<int> default_obs_per_period_grid();
std::vector<int> default_n_bins_grid();
std::vector<int> default_alpha_grid();

}  // namespace tegdet
