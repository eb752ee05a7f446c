#include "tegdet/detector.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "tegdet/error.hpp"

namespace tegdet {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Same two-sided form numpy uses, so the result is monotone in t and exact
// at both ends.
double lerp(double a, double b, double t) {
  const double d = b - a;
  return t < 0.5 ? a + d * t : b - d * (1.0 - t);
}

}  // namespace

void DetectorParams::validate() const {
  metric_info(metric);
  if (n_bins < 1) throw InvalidArgument("n_bins must be >= 1, got " + std::to_string(n_bins));
  if (n_obs_per_period < 1) {
    throw InvalidArgument("n_obs_per_period must be >= 1, got " + std::to_string(n_obs_per_period));
  }
  if (alpha <= 0 || alpha >= 100) {
    throw InvalidArgument("alpha must be in (0, 100), got " + std::to_string(alpha));
  }
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& o) {
  tp += o.tp;
  tn += o.tn;
  fp += o.fp;
  fn += o.fn;
  return *this;
}

Model build_model(const TimeSeries& train, const DetectorParams& params) {
  params.validate();
  const auto start = Clock::now();

  Model model;
  model.params = params;
  model.discretizer = Discretizer::fit(train, params.n_bins);
  const auto graphs = discover_tegs(model.discretizer.apply(train),
                                    static_cast<std::size_t>(params.n_obs_per_period));
  model.global = global_graph(graphs);
  model.baseline.reserve(graphs.size());
  for (const auto& g : graphs) {
    model.baseline.push_back(graph_dissimilarity(params.metric, g, model.global));
  }

  model.time_to_build = seconds_since(start);
  return model;
}

double threshold(std::span<const double> baseline, int alpha) {
  if (baseline.empty()) throw InvalidArgument("threshold: empty baseline");
  if (alpha <= 0 || alpha >= 100) throw InvalidArgument("threshold: alpha must be in (0, 100)");

  std::vector<double> sorted(baseline.begin(), baseline.end());
  std::sort(sorted.begin(), sorted.end());
  const double rank = (100.0 - alpha) / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return lerp(sorted[lo], sorted[hi], rank - static_cast<double>(lo));
}

DetectionOutcome predict(const Model& model, const TimeSeries& test) {
  model.params.validate();
  const auto start = Clock::now();

  const auto s = static_cast<std::size_t>(model.params.n_obs_per_period);
  if (test.size() < s) {
    throw DataError("testing series of " + std::to_string(test.size()) +
                    " observations is shorter than one epoch of " + std::to_string(s));
  }
  const auto graphs = discover_tegs(model.discretizer.apply(test), s);

  DetectionOutcome out;
  out.n_periods = graphs.size();
  out.threshold = threshold(model.baseline, model.params.alpha);
  out.dissimilarities.reserve(graphs.size());
  out.outliers.reserve(graphs.size());
  for (const auto& g : graphs) {
    const double d = graph_dissimilarity(model.params.metric, g, model.global);
    out.dissimilarities.push_back(d);
    out.outliers.push_back(d > out.threshold ? 1 : 0);
  }

  out.time_to_predict = seconds_since(start);
  return out;
}

ConfusionMatrix compute_confusion_matrix(std::span<const int> ground_truth,
                                         std::span<const int> predictions) {
  if (ground_truth.size() != predictions.size()) {
    throw InvalidArgument("confusion matrix: " + std::to_string(ground_truth.size()) +
                          " ground-truth values vs " + std::to_string(predictions.size()) +
                          " predictions");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < ground_truth.size(); ++i) {
    const bool truth = ground_truth[i] != 0;
    const bool pred = predictions[i] != 0;
    if (truth && pred) ++cm.tp;
    else if (!truth && !pred) ++cm.tn;
    else if (pred) ++cm.fp;
    else ++cm.fn;
  }
  return cm;
}

double accuracy(const ConfusionMatrix& cm) {
  if (cm.total() <= 0) throw InvalidArgument("accuracy: empty confusion matrix");
  return static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
}

}  // namespace tegdet
