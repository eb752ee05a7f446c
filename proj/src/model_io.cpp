#include "tegdet/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "tegdet/error.hpp"
#include "text.hpp"

namespace tegdet {

namespace {

constexpr std::string_view kMagic = "tegdet-model";

template <typename Range>
void write_list(std::ostream& os, std::string_view key, const Range& values) {
  os << key << ' ' << values.size();
  for (const auto& v : values) {
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) {
      os << ' ' << detail::format_real(v);
    } else {
      os << ' ' << v;
    }
  }
  os << '\n';
}

// Line-oriented reader over the model document. Every failure is a
// FormatError naming the line.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<std::string_view> line(std::string_view key) {
    if (text_.empty()) fail("unexpected end of file, expected '" + std::string(key) + "'");
    const auto nl = text_.find('\n');
    if (nl == std::string_view::npos) fail("truncated line, expected '" + std::string(key) + "'");
    std::string_view ln = text_.substr(0, nl);
    text_.remove_prefix(nl + 1);
    ++line_no_;
    if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);

    std::vector<std::string_view> tokens;
    while (!ln.empty()) {
      const auto b = ln.find_first_not_of(' ');
      if (b == std::string_view::npos) break;
      ln.remove_prefix(b);
      const auto e = ln.find(' ');
      tokens.push_back(ln.substr(0, e));
      ln = e == std::string_view::npos ? std::string_view{} : ln.substr(e);
    }
    if (tokens.empty() || tokens.front() != key) {
      fail("expected '" + std::string(key) + "'");
    }
    tokens.erase(tokens.begin());
    return tokens;
  }

  template <typename T>
  T number(std::string_view token) {
    const auto v = detail::parse_number<T>(token);
    if (!v) fail("malformed number '" + std::string(token) + "'");
    if constexpr (std::is_floating_point_v<T>) {
      if (!std::isfinite(*v)) fail("non-finite number '" + std::string(token) + "'");
    }
    return *v;
  }

  template <typename T>
  T scalar(std::string_view key) {
    const auto tokens = line(key);
    if (tokens.size() != 1) fail("'" + std::string(key) + "' takes one value");
    return number<T>(tokens[0]);
  }

  template <typename T>
  std::vector<T> list(std::string_view key) {
    const auto tokens = line(key);
    if (tokens.empty()) fail("'" + std::string(key) + "' is missing its length");
    const auto n = number<std::size_t>(tokens[0]);
    if (tokens.size() - 1 != n) {
      fail("'" + std::string(key) + "' declares " + std::to_string(n) + " values but has " +
           std::to_string(tokens.size() - 1));
    }
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 1; i < tokens.size(); ++i) out.push_back(number<T>(tokens[i]));
    return out;
  }

  bool at_end() const { return text_.find_first_not_of("\r\n") == std::string_view::npos; }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("model file line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t line_no_ = 0;
};

}  // namespace

std::string serialize_model(const Model& model) {
  std::ostringstream os;
  os << kMagic << ' ' << kModelFormatVersion << '\n';
  os << "metric " << metric_name(model.params.metric) << '\n';
  os << "n_bins " << model.params.n_bins << '\n';
  os << "n_obs_per_period " << model.params.n_obs_per_period << '\n';
  os << "alpha " << model.params.alpha << '\n';
  os << "time_to_build " << detail::format_real(model.time_to_build) << '\n';
  os << "discretizer " << detail::format_real(model.discretizer.min()) << ' '
     << detail::format_real(model.discretizer.max()) << ' ' << model.discretizer.n_levels()
     << '\n';
  write_list(os, "levels", model.global.levels());
  write_list(os, "weights", model.global.weights());
  write_list(os, "adjacency", model.global.adjacency());
  write_list(os, "baseline", model.baseline);
  os << "end\n";
  return os.str();
}

Model deserialize_model(std::string_view text) {
  Reader in(text);
  {
    const auto header = in.line(kMagic);
    if (header.size() != 1) in.fail("malformed header");
    const auto version = in.number<int>(header[0]);
    if (version != kModelFormatVersion) {
      throw VersionError("model file format version " + std::to_string(version) +
                         " is not supported (expected " + std::to_string(kModelFormatVersion) +
                         ")");
    }
  }

  Model m;
  {
    const auto tokens = in.line("metric");
    if (tokens.size() != 1) in.fail("'metric' takes one value");
    try {
      m.params.metric = parse_metric(tokens[0]);
    } catch (const InvalidArgument& e) {
      in.fail(e.what());
    }
  }
  m.params.n_bins = in.scalar<int>("n_bins");
  m.params.n_obs_per_period = in.scalar<int>("n_obs_per_period");
  m.params.alpha = in.scalar<int>("alpha");
  m.time_to_build = in.scalar<double>("time_to_build");

  const auto disc = in.line("discretizer");
  if (disc.size() != 3) in.fail("'discretizer' takes min, max and level count");
  auto levels = in.list<Level>("levels");
  auto weights = in.list<Count>("weights");
  auto adjacency = in.list<Count>("adjacency");
  m.baseline = in.list<double>("baseline");
  in.line("end");
  if (!in.at_end()) in.fail("trailing content after 'end'");

  try {
    m.params.validate();
    m.discretizer = Discretizer(in.number<double>(disc[0]), in.number<double>(disc[1]),
                                in.number<int>(disc[2]));
    m.global = Graph(std::move(levels), std::move(weights), std::move(adjacency));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("model file: ") + e.what());
  }
  if (m.discretizer.n_levels() != m.params.n_bins) {
    throw FormatError("model file: discretizer level count differs from n_bins");
  }
  if (m.global.size() == 0 || m.global.has_wildcards()) {
    throw FormatError("model file: global graph must be nonempty and free of wildcards");
  }
  if (m.baseline.empty()) throw FormatError("model file: empty baseline");
  return m;
}

void save_model(const Model& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(path.string() + ": cannot open for writing");
  out << serialize_model(model);
  out.flush();
  if (!out) throw DataError(path.string() + ": write failed");
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open model file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_model(buf.str());
}

}  // namespace tegdet
