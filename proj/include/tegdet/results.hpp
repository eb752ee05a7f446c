#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tegdet/detector.hpp"

namespace tegdet {

inline constexpr std::string_view kResultsHeader =
    "detector,n_bins,n_obs_per_period,alpha,testing_set,time2build,time2predict,tp,tn,fp,fn";

enum class GroundTruth { Normal, Anomalous, None };

GroundTruth parse_ground_truth(std::string_view label);
std::string_view ground_truth_name(GroundTruth gt);

/// All-zeros for Normal, all-ones for Anomalous, empty for None.
std::vector<int> ground_truth_vector(GroundTruth gt, std::size_t n_periods);

/// One evaluation of a detector configuration on a testing set.
struct ResultsRow {
  std::string detector;
  int n_bins = 0;
  int n_obs_per_period = 0;
  int alpha = 0;
  std::string testing_set;
  double time2build = 0.0;
  double time2predict = 0.0;
  std::optional<ConfusionMatrix> cm;

  friend bool operator==(const ResultsRow&, const ResultsRow&) = default;
};

/// Shortest decimal text that parses back to the same double.
std::string format_real(double x);

std::string format_row(const ResultsRow& row);
ResultsRow parse_row(std::string_view line);

/// Appends rows, writing the header first when the file is absent or empty.
void append_results(const std::filesystem::path& path, const std::vector<ResultsRow>& rows);

std::vector<ResultsRow> read_results(const std::filesystem::path& path);

/// Block printed after a detection, laid out like the reference tool's output.
std::string format_detection_report(const ResultsRow& row);

struct SummaryStats {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
};

SummaryStats summarize(std::span<const double> values);

struct DetectorAccuracy {
  std::string detector;
  ConfusionMatrix cm;
  double accuracy = 0.0;
};

/// Sums every labelled row per detector and applies accuracy(); sorted by
/// descending accuracy, ties by detector name.
std::vector<DetectorAccuracy> accuracy_by_detector(const std::vector<ResultsRow>& rows);

struct ParamCombination {
  std::string detector;
  int n_bins = 0;
  int n_obs_per_period = 0;
  int alpha = 0;
  double mean_time2build = 0.0;
  double mean_time2predict = 0.0;
  std::optional<double> accuracy;
};

/// Groups rows by (detector, n_bins, n_obs_per_period, alpha) in first-seen order.
std::vector<ParamCombination> summarize_by_params(const std::vector<ResultsRow>& rows);

}  // namespace tegdet
