#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tegdet {

using Level = int;

/// Ordered (timestamp, value) observations. Timestamps are opaque labels that
/// are carried through but never interpreted.
class TimeSeries {
 public:
  TimeSeries(std::vector<std::string> timestamps, std::vector<double> values);

  /// Builds a series whose timestamps are the row indices 0..N-1.
  static TimeSeries from_values(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<const std::string> timestamps() const { return *timestamps_; }

 private:
  friend class Discretizer;
  std::shared_ptr<const std::vector<std::string>> timestamps_;
  std::vector<double> values_;
};

/// Levels assigned to each observation of a TimeSeries, same length and order.
class DiscreteSeries {
 public:
  std::size_t size() const { return levels_.size(); }
  std::span<const Level> levels() const { return levels_; }
  std::span<const std::string> timestamps() const { return *timestamps_; }

 private:
  friend class Discretizer;
  DiscreteSeries(std::shared_ptr<const std::vector<std::string>> ts, std::vector<Level> levels)
      : timestamps_(std::move(ts)), levels_(std::move(levels)) {}

  std::shared_ptr<const std::vector<std::string>> timestamps_;
  std::vector<Level> levels_;
};

/// Equal-width discretization fitted on a training range [min, max] with n
/// in-range levels 0..n-1. Values below the range map to n, values at or
/// above the maximum map to n+1.
class Discretizer {
 public:
  Discretizer(double min, double max, int n_levels);

  static Discretizer fit(const TimeSeries& train, int n_bins);

  double min() const { return min_; }
  double max() const { return max_; }
  int n_levels() const { return n_levels_; }

  Level level(double x) const;
  DiscreteSeries apply(const TimeSeries& ts) const;

  friend bool operator==(const Discretizer&, const Discretizer&) = default;

 private:
  double min_;
  double max_;
  int n_levels_;
  double width_;
};

/// Reads a two-column CSV (timestamp, value) with one header row. Header
/// names are ignored.
TimeSeries load_dataset(const std::filesystem::path& path);

/// Same as load_dataset but from an in-memory document; `source` names the
/// input in diagnostics.
TimeSeries parse_dataset(std::string_view text, std::string_view source = "<memory>");

}  // namespace tegdet
