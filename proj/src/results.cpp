#include "tegdet/results.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "tegdet/error.hpp"
#include "text.hpp"

namespace tegdet {

GroundTruth parse_ground_truth(std::string_view label) {
  if (label == "normal") return GroundTruth::Normal;
  if (label == "anomalous") return GroundTruth::Anomalous;
  if (label == "none") return GroundTruth::None;
  throw InvalidArgument("ground truth must be normal, anomalous or none, got '" +
                        std::string(label) + "'");
}

std::string_view ground_truth_name(GroundTruth gt) {
  switch (gt) {
    case GroundTruth::Normal: return "normal";
    case GroundTruth::Anomalous: return "anomalous";
    case GroundTruth::None: return "none";
  }
  return "none";
}

std::vector<int> ground_truth_vector(GroundTruth gt, std::size_t n_periods) {
  switch (gt) {
    case GroundTruth::Normal: return std::vector<int>(n_periods, 0);
    case GroundTruth::Anomalous: return std::vector<int>(n_periods, 1);
    case GroundTruth::None: break;
  }
  return {};
}

std::string format_real(double x) { return detail::format_real(x); }

std::string format_row(const ResultsRow& row) {
  if (row.detector.find_first_of(",\n") != std::string::npos ||
      row.testing_set.find_first_of(",\n") != std::string::npos) {
    throw InvalidArgument("results row: detector and testing set must not contain ',' or newlines");
  }
  std::ostringstream os;
  os << row.detector << ',' << row.n_bins << ',' << row.n_obs_per_period << ',' << row.alpha << ','
     << row.testing_set << ',' << format_real(row.time2build) << ','
     << format_real(row.time2predict) << ',';
  if (row.cm) {
    os << row.cm->tp << ',' << row.cm->tn << ',' << row.cm->fp << ',' << row.cm->fn;
  } else {
    os << ",,,";
  }
  return os.str();
}

ResultsRow parse_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> f;
  for (;;) {
    const auto c = line.find(',');
    f.push_back(line.substr(0, c));
    if (c == std::string_view::npos) break;
    line.remove_prefix(c + 1);
  }
  if (f.size() != 11) {
    throw DataError("results row has " + std::to_string(f.size()) + " fields, expected 11");
  }
  auto num = [](std::string_view s, const char* what) {
    const auto v = detail::parse_number<long long>(s);
    if (!v) throw DataError(std::string("results row: malformed ") + what + " '" + std::string(s) + "'");
    return *v;
  };
  auto real = [](std::string_view s, const char* what) {
    const auto v = detail::parse_number<double>(s);
    if (!v || !std::isfinite(*v)) {
      throw DataError(std::string("results row: malformed ") + what + " '" + std::string(s) + "'");
    }
    return *v;
  };

  ResultsRow row;
  row.detector = std::string(f[0]);
  row.n_bins = static_cast<int>(num(f[1], "n_bins"));
  row.n_obs_per_period = static_cast<int>(num(f[2], "n_obs_per_period"));
  row.alpha = static_cast<int>(num(f[3], "alpha"));
  row.testing_set = std::string(f[4]);
  row.time2build = real(f[5], "time2build");
  row.time2predict = real(f[6], "time2predict");
  const bool blank = f[7].empty() && f[8].empty() && f[9].empty() && f[10].empty();
  if (!blank) {
    row.cm = ConfusionMatrix{num(f[7], "tp"), num(f[8], "tn"), num(f[9], "fp"), num(f[10], "fn")};
  }
  return row;
}

void append_results(const std::filesystem::path& path, const std::vector<ResultsRow>& rows) {
  std::error_code ec;
  const bool need_header = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw DataError(path.string() + ": cannot open results file for writing");
  if (need_header) out << kResultsHeader << '\n';
  for (const auto& row : rows) out << format_row(row) << '\n';
  out.flush();
  if (!out) throw DataError(path.string() + ": write failed");
}

std::vector<ResultsRow> read_results(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open results file");
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": empty results file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kResultsHeader) throw DataError(path.string() + ": unexpected results header");

  std::vector<ResultsRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    try {
      rows.push_back(parse_row(line));
    } catch (const DataError& e) {
      throw DataError(path.string() + ": row " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (rows.empty()) throw DataError(path.string() + ": results file has no data rows");
  return rows;
}

std::string format_detection_report(const ResultsRow& row) {
  std::ostringstream os;
  os << "Detector:\t\t\t" << row.detector << '\n'
     << "N_bins:\t\t\t" << row.n_bins << '\n'
     << "N_obs_per_period:\t\t" << row.n_obs_per_period << '\n'
     << "Alpha:\t\t\t" << row.alpha << '\n'
     << "Testing set:\t\t\t" << row.testing_set << '\n'
     << "Time to build the model:\t" << format_real(row.time2build) << " seconds\n"
     << "Time to make prediction:\t" << format_real(row.time2predict) << " seconds\n"
     << "Confusion matrix:\t\n";
  if (row.cm) {
    os << " {'tp': " << row.cm->tp << ", 'tn': " << row.cm->tn << ", 'fp': " << row.cm->fp
       << ", 'fn': " << row.cm->fn << "}\n";
  } else {
    os << " (no ground truth)\n";
  }
  return os.str();
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("summarize: no values");
  SummaryStats s;
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / n;
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / n);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

std::vector<DetectorAccuracy> accuracy_by_detector(const std::vector<ResultsRow>& rows) {
  std::vector<DetectorAccuracy> out;
  for (const auto& row : rows) {
    if (!row.cm) continue;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const DetectorAccuracy& d) { return d.detector == row.detector; });
    if (it == out.end()) {
      out.push_back({row.detector, *row.cm, 0.0});
    } else {
      it->cm += *row.cm;
    }
  }
  for (auto& d : out) d.accuracy = accuracy(d.cm);
  std::stable_sort(out.begin(), out.end(), [](const DetectorAccuracy& a, const DetectorAccuracy& b) {
    if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
    return a.detector < b.detector;
  });
  return out;
}

std::vector<ParamCombination> summarize_by_params(const std::vector<ResultsRow>& rows) {
  struct Acc {
    ParamCombination combo;
    double build_sum = 0.0;
    double predict_sum = 0.0;
    std::size_t n = 0;
    std::optional<ConfusionMatrix> cm;
  };
  std::vector<Acc> groups;
  std::map<std::tuple<std::string, int, int, int>, std::size_t> index;
  for (const auto& row : rows) {
    const auto key = std::make_tuple(row.detector, row.n_bins, row.n_obs_per_period, row.alpha);
    auto [it, inserted] = index.try_emplace(key, groups.size());
    if (inserted) {
      groups.push_back({});
      groups.back().combo = {row.detector, row.n_bins, row.n_obs_per_period, row.alpha, 0.0, 0.0, std::nullopt};
    }
    auto& g = groups[it->second];
    g.build_sum += row.time2build;
    g.predict_sum += row.time2predict;
    ++g.n;
    if (row.cm) g.cm = g.cm ? *g.cm + *row.cm : *row.cm;
  }

  std::vector<ParamCombination> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    g.combo.mean_time2build = g.build_sum / static_cast<double>(g.n);
    g.combo.mean_time2predict = g.predict_sum / static_cast<double>(g.n);
    if (g.cm && g.cm->total() > 0) g.combo.accuracy = accuracy(*g.cm);
    out.push_back(std::move(g.combo));
  }
  return out;
}

}  // namespace tegdet
