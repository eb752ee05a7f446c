#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tegdet/data.hpp"
#include "tegdet/graph.hpp"
#include "tegdet/metrics.hpp"

namespace tegdet {

struct DetectorParams {
  Metric metric = Metric::Hamming;
  int n_bins = 30;
  int n_obs_per_period = 336;
  /// Significance level; the threshold is the (100 - alpha)-th percentile.
  int alpha = 5;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;

  friend bool operator==(const DetectorParams&, const DetectorParams&) = default;
};

/// Prediction model: global graph of the training epochs plus the baseline
/// distribution of each training epoch's dissimilarity to it.
struct Model {
  DetectorParams params;
  Discretizer discretizer{0.0, 0.0, 1};
  Graph global;
  std::vector<double> baseline;
  /// Wall-clock seconds spent in build_model. Informational only.
  double time_to_build = 0.0;

  friend bool operator==(const Model&, const Model&) = default;
};

struct DetectionOutcome {
  std::vector<int> outliers;
  std::size_t n_periods = 0;
  /// Per-epoch dissimilarity against the global graph.
  std::vector<double> dissimilarities;
  double threshold = 0.0;
  double time_to_predict = 0.0;
};

struct ConfusionMatrix {
  long long tp = 0;
  long long tn = 0;
  long long fp = 0;
  long long fn = 0;

  long long total() const { return tp + tn + fp + fn; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o);
  friend ConfusionMatrix operator+(ConfusionMatrix a, const ConfusionMatrix& b) { return a += b; }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

Model build_model(const TimeSeries& train, const DetectorParams& params);

/// (100 - alpha)-th percentile of the baseline, linear interpolation between
/// closest ranks.
double threshold(std::span<const double> baseline, int alpha);

/// Flags every test epoch whose dissimilarity strictly exceeds the threshold.
DetectionOutcome predict(const Model& model, const TimeSeries& test);

/// Pairs are (ground truth, prediction).
ConfusionMatrix compute_confusion_matrix(std::span<const int> ground_truth,
                                         std::span<const int> predictions);

double accuracy(const ConfusionMatrix& cm);

}  // namespace tegdet
