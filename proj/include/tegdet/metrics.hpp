#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tegdet/graph.hpp"

namespace tegdet {

enum class Metric {
  Hamming,
  Cosine,
  Jaccard,
  Dice,
  KL,
  Jeffreys,
  JS,
  Euclidean,
  Cityblock,
  Chebyshev,
  Minkowski,
  Braycurtis,
  Gower,
  Soergel,
  Kulczynski,
  Canberra,
  Lorentzian,
  Bhattacharyya,
  Hellinger,
  Matusita,
  Squaredchord,
  Pearson,
  Neyman,
  Squared,
  Probsymmetric,
  Divergence,
  Clark,
  Additivesymmetric,
};

/// How a graph pair is flattened before a metric is applied.
enum class VectorForm {
  /// Flattened adjacency, wildcards kept as -1.
  RawWithWildcards,
  /// Node weights followed by the flattened adjacency, wildcards set to 0.
  WeightsAndAdjacency,
  /// Flattened adjacency, wildcards set to 0, divided by its own sum.
  RelativeFrequencies,
};

using MetricKernel = double (*)(std::span<const double> p, std::span<const double> q);

struct MetricInfo {
  Metric id;
  std::string_view name;
  VectorForm form;
  MetricKernel kernel;
  bool symmetric;
};

/// Registry of every metric in canonical order. Adding a metric means adding
/// an enumerator and one row here.
std::span<const MetricInfo> metric_registry();

const MetricInfo& metric_info(Metric metric);
std::string_view metric_name(Metric metric);

/// Case-sensitive lookup; throws InvalidArgument on an unknown name.
Metric parse_metric(std::string_view name);

/// The 28 metric names in canonical order (Hamming first, Additivesymmetric last).
std::vector<std::string> list_metrics();

struct ComparisonVectors {
  std::vector<double> p;  // from the epoch graph
  std::vector<double> q;  // from the global graph
};

/// Flattens an (epoch, global) pair that shares the same level list into the
/// vector form the metric expects.
ComparisonVectors vectorize(const Graph& epoch, const Graph& global, Metric metric);

/// Applies the metric kernel. Vectors must come from vectorize() for the
/// same metric (or satisfy the same contract).
double dissimilarity(Metric metric, const ComparisonVectors& v);
double dissimilarity(Metric metric, std::span<const double> p, std::span<const double> q);

/// Resizes both graphs onto the union of their levels, then vectorizes and
/// applies the metric.
double graph_dissimilarity(Metric metric, const Graph& epoch, const Graph& global);

}  // namespace tegdet
