#include "tegdet/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tegdet/error.hpp"

namespace tegdet {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string where(std::string_view source, std::size_t line) {
  std::ostringstream os;
  os << source << ": row " << line;
  return os.str();
}

}  // namespace

TimeSeries::TimeSeries(std::vector<std::string> timestamps, std::vector<double> values)
    : values_(std::move(values)) {
  if (timestamps.size() != values_.size()) {
    throw InvalidArgument("time series: timestamp and value counts differ");
  }
  if (values_.empty()) throw DataError("time series: empty dataset");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("time series: non-finite value at index " + std::to_string(i));
    }
  }
  timestamps_ = std::make_shared<const std::vector<std::string>>(std::move(timestamps));
}

TimeSeries TimeSeries::from_values(std::vector<double> values) {
  std::vector<std::string> ts(values.size());
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = std::to_string(i);
  return TimeSeries(std::move(ts), std::move(values));
}

Discretizer::Discretizer(double min, double max, int n_levels)
    : min_(min), max_(max), n_levels_(n_levels) {
  if (n_levels < 1) throw InvalidArgument("n_bins must be >= 1");
  if (!std::isfinite(min) || !std::isfinite(max) || min > max) {
    throw InvalidArgument("discretizer range must satisfy min <= max");
  }
  width_ = (max_ - min_) / n_levels_;
}

Discretizer Discretizer::fit(const TimeSeries& train, int n_bins) {
  if (n_bins < 1) throw InvalidArgument("n_bins must be >= 1");
  if (train.size() == 0) throw DataError("cannot fit a discretizer on an empty series");
  const auto [lo, hi] = std::minmax_element(train.values_.begin(), train.values_.end());
  return Discretizer(*lo, *hi, n_bins);
}

Level Discretizer::level(double x) const {
  if (x < min_) return n_levels_;
  if (x >= max_) return n_levels_ + 1;
  // Here min <= x < max, so width > 0. The floor estimate is corrected
  // against the interval bounds min + i*width, which can disagree with the
  // quotient by one ulp.
  auto i = static_cast<Level>((x - min_) / width_);
  i = std::clamp(i, 0, n_levels_ - 1);
  while (i > 0 && x < min_ + i * width_) --i;
  while (i < n_levels_ - 1 && x >= min_ + (i + 1) * width_) ++i;
  return i;
}

DiscreteSeries Discretizer::apply(const TimeSeries& ts) const {
  std::vector<Level> levels(ts.size());
  std::transform(ts.values_.begin(), ts.values_.end(), levels.begin(),
                 [this](double x) { return level(x); });
  return DiscreteSeries(ts.timestamps_, std::move(levels));
}

TimeSeries parse_dataset(std::string_view text, std::string_view source) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string> timestamps;
  std::vector<double> values;
  bool header_seen = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw DataError(where(source, line_no) + ": expected two columns, found one");
    }
    if (line.find(',', comma + 1) != std::string_view::npos) {
      throw DataError(where(source, line_no) + ": expected two columns, found more");
    }
    if (!header_seen) {
      header_seen = true;
      continue;
    }

    const auto ts = trim(line.substr(0, comma));
    const auto field = trim(line.substr(comma + 1));
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
      throw DataError(where(source, line_no) + ": value '" + std::string(field) +
                      "' is not a number");
    }
    if (!std::isfinite(value)) {
      throw DataError(where(source, line_no) + ": value '" + std::string(field) +
                      "' is not finite");
    }
    timestamps.emplace_back(ts);
    values.push_back(value);
  }

  if (!header_seen) throw DataError(std::string(source) + ": missing header row");
  if (values.empty()) throw DataError(std::string(source) + ": empty dataset");
  return TimeSeries(std::move(timestamps), std::move(values));
}

TimeSeries load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str(), path.string());
}

}  // namespace tegdet
