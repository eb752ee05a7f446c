#include "tegdet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tegdet/error.hpp"

namespace tegdet {

namespace {

using Vec = std::span<const double>;

// Conventions shared by every kernel: a summand with a zero denominator
// contributes 0, and so does any log term with a zero on either side.
// Results that would be +inf are reported as the largest finite double.
constexpr double kInfinite = std::numeric_limits<double>::max();

template <typename F>
double sum_over(Vec p, Vec q, F&& term) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += term(p[i], q[i]);
  return s;
}

double ratio_or_zero(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

bool hamming_match(double x, double y) { return (x > 0 && y > 0) || (x == 0 && y == 0); }

double hamming(Vec p, Vec q) {
  if (p.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < p.size(); ++i) hits += hamming_match(p[i], q[i]) ? 1 : 0;
  return 1.0 - static_cast<double>(hits) / static_cast<double>(p.size());
}

double cosine(Vec p, Vec q) {
  const double dot = sum_over(p, q, [](double a, double b) { return a * b; });
  const double pp = sum_over(p, p, [](double a, double b) { return a * b; });
  const double qq = sum_over(q, q, [](double a, double b) { return a * b; });
  return std::max(0.0, 1.0 - ratio_or_zero(dot, std::sqrt(pp) * std::sqrt(qq)));
}

double squared_distance(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return (a - b) * (a - b); });
}

double jaccard(Vec p, Vec q) {
  const double pp = sum_over(p, p, [](double a, double b) { return a * b; });
  const double qq = sum_over(q, q, [](double a, double b) { return a * b; });
  const double pq = sum_over(p, q, [](double a, double b) { return a * b; });
  return ratio_or_zero(squared_distance(p, q), pp + qq - pq);
}

double dice(Vec p, Vec q) {
  const double pp = sum_over(p, p, [](double a, double b) { return a * b; });
  const double qq = sum_over(q, q, [](double a, double b) { return a * b; });
  return ratio_or_zero(squared_distance(p, q), pp + qq);
}

double kl(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) {
    return (a == 0.0 || b == 0.0) ? 0.0 : a * std::log2(a / b);
  });
}

double jeffreys(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) {
    return (a == 0.0 || b == 0.0) ? 0.0 : (a - b) * std::log(a / b);
  });
}

double js(Vec p, Vec q) {
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  const double s = 0.5 * (kl(p, m) + kl(q, m));
  return std::sqrt(std::max(0.0, s));
}

double euclidean(Vec p, Vec q) { return std::sqrt(squared_distance(p, q)); }

double cityblock(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return std::abs(a - b); });
}

double chebyshev(Vec p, Vec q) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

double minkowski(Vec p, Vec q) {
  return std::cbrt(sum_over(p, q, [](double a, double b) {
    const double d = std::abs(a - b);
    return d * d * d;
  }));
}

double braycurtis(Vec p, Vec q) {
  return ratio_or_zero(cityblock(p, q), sum_over(p, q, [](double a, double b) { return a + b; }));
}

double gower(Vec p, Vec q) {
  return p.empty() ? 0.0 : cityblock(p, q) / static_cast<double>(p.size());
}

double soergel(Vec p, Vec q) {
  return ratio_or_zero(cityblock(p, q),
                       sum_over(p, q, [](double a, double b) { return std::max(a, b); }));
}

double kulczynski(Vec p, Vec q) {
  const double num = cityblock(p, q);
  const double den = sum_over(p, q, [](double a, double b) { return std::min(a, b); });
  if (den == 0.0) return num == 0.0 ? 0.0 : kInfinite;
  return num / den;
}

double canberra(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return ratio_or_zero(std::abs(a - b), a + b); });
}

double lorentzian(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return std::log1p(std::abs(a - b)); });
}

double fidelity(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return std::sqrt(a * b); });
}

double bhattacharyya(Vec p, Vec q) {
  const double bc = fidelity(p, q);
  if (bc == 0.0) return kInfinite;
  return std::max(0.0, -std::log(bc));
}

double squaredchord(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) {
    const double d = std::sqrt(a) - std::sqrt(b);
    return d * d;
  });
}

// For unit-mass inputs 1 - sum(sqrt(pq)) equals half the squared chord
// distance; the chord form avoids cancellation and is exactly 0 at p == q.
double hellinger(Vec p, Vec q) { return 2.0 * std::sqrt(0.5 * squaredchord(p, q)); }

double matusita(Vec p, Vec q) { return std::sqrt(squaredchord(p, q)); }

double pearson(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return ratio_or_zero((a - b) * (a - b), b); });
}

double neyman(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return ratio_or_zero((a - b) * (a - b), a); });
}

double squared(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) { return ratio_or_zero((a - b) * (a - b), a + b); });
}

double probsymmetric(Vec p, Vec q) { return 2.0 * squared(p, q); }

double divergence(Vec p, Vec q) {
  return 2.0 * sum_over(p, q, [](double a, double b) {
           return ratio_or_zero((a - b) * (a - b), (a + b) * (a + b));
         });
}

double clark(Vec p, Vec q) {
  return std::sqrt(sum_over(p, q, [](double a, double b) {
    const double r = ratio_or_zero(std::abs(a - b), a + b);
    return r * r;
  }));
}

double additivesymmetric(Vec p, Vec q) {
  return sum_over(p, q, [](double a, double b) {
    return ratio_or_zero((a - b) * (a - b) * (a + b), a * b);
  });
}

constexpr auto R = VectorForm::RelativeFrequencies;

constexpr std::array<MetricInfo, 28> kRegistry{{
    {Metric::Hamming, "Hamming", VectorForm::RawWithWildcards, hamming, true},
    {Metric::Cosine, "Cosine", VectorForm::WeightsAndAdjacency, cosine, true},
    {Metric::Jaccard, "Jaccard", R, jaccard, true},
    {Metric::Dice, "Dice", R, dice, true},
    {Metric::KL, "KL", R, kl, false},
    {Metric::Jeffreys, "Jeffreys", R, jeffreys, true},
    {Metric::JS, "JS", R, js, true},
    {Metric::Euclidean, "Euclidean", R, euclidean, true},
    {Metric::Cityblock, "Cityblock", R, cityblock, true},
    {Metric::Chebyshev, "Chebyshev", R, chebyshev, true},
    {Metric::Minkowski, "Minkowski", R, minkowski, true},
    {Metric::Braycurtis, "Braycurtis", R, braycurtis, true},
    {Metric::Gower, "Gower", R, gower, true},
    {Metric::Soergel, "Soergel", R, soergel, true},
    {Metric::Kulczynski, "Kulczynski", R, kulczynski, true},
    {Metric::Canberra, "Canberra", R, canberra, true},
    {Metric::Lorentzian, "Lorentzian", R, lorentzian, true},
    {Metric::Bhattacharyya, "Bhattacharyya", R, bhattacharyya, true},
    {Metric::Hellinger, "Hellinger", R, hellinger, true},
    {Metric::Matusita, "Matusita", R, matusita, true},
    {Metric::Squaredchord, "Squaredchord", R, squaredchord, true},
    {Metric::Pearson, "Pearson", R, pearson, false},
    {Metric::Neyman, "Neyman", R, neyman, false},
    {Metric::Squared, "Squared", R, squared, true},
    {Metric::Probsymmetric, "Probsymmetric", R, probsymmetric, true},
    {Metric::Divergence, "Divergence", R, divergence, true},
    {Metric::Clark, "Clark", R, clark, true},
    {Metric::Additivesymmetric, "Additivesymmetric", R, additivesymmetric, true},
}};

static_assert([] {
  for (std::size_t i = 0; i < kRegistry.size(); ++i) {
    if (static_cast<std::size_t>(kRegistry[i].id) != i) return false;
  }
  return true;
}(), "registry rows must follow the Metric enumerator order");

void flatten_into(std::span<const Count> counts, bool keep_wildcards, std::vector<double>& out) {
  for (Count c : counts) {
    out.push_back(c == Graph::kWildcard && !keep_wildcards ? 0.0 : static_cast<double>(c));
  }
}

void normalize(std::vector<double>& v, const char* side) {
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  if (total <= 0.0) {
    throw DataError(std::string("cannot compute relative frequencies: the ") + side +
                    " graph has no transitions");
  }
  for (double& x : v) x /= total;
}

}  // namespace

std::span<const MetricInfo> metric_registry() { return kRegistry; }

const MetricInfo& metric_info(Metric metric) {
  const auto i = static_cast<std::size_t>(metric);
  if (i >= kRegistry.size()) throw InvalidArgument("unknown metric id");
  return kRegistry[i];
}

std::string_view metric_name(Metric metric) { return metric_info(metric).name; }

Metric parse_metric(std::string_view name) {
  for (const auto& info : kRegistry) {
    if (info.name == name) return info.id;
  }
  throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

std::vector<std::string> list_metrics() {
  std::vector<std::string> names;
  names.reserve(kRegistry.size());
  for (const auto& info : kRegistry) names.emplace_back(info.name);
  return names;
}

ComparisonVectors vectorize(const Graph& epoch, const Graph& global, Metric metric) {
  if (!std::equal(epoch.levels().begin(), epoch.levels().end(), global.levels().begin(),
                  global.levels().end())) {
    throw InvalidArgument("vectorize: graphs must share the same level list");
  }
  ComparisonVectors v;
  const auto form = metric_info(metric).form;
  const auto n = epoch.size();
  const std::size_t len = n * n + (form == VectorForm::WeightsAndAdjacency ? n : 0);
  v.p.reserve(len);
  v.q.reserve(len);

  switch (form) {
    case VectorForm::RawWithWildcards:
      flatten_into(epoch.adjacency(), true, v.p);
      flatten_into(global.adjacency(), true, v.q);
      break;
    case VectorForm::WeightsAndAdjacency:
      flatten_into(epoch.weights(), false, v.p);
      flatten_into(epoch.adjacency(), false, v.p);
      flatten_into(global.weights(), false, v.q);
      flatten_into(global.adjacency(), false, v.q);
      break;
    case VectorForm::RelativeFrequencies:
      flatten_into(epoch.adjacency(), false, v.p);
      flatten_into(global.adjacency(), false, v.q);
      normalize(v.p, "epoch");
      normalize(v.q, "global");
      break;
  }
  return v;
}

double dissimilarity(Metric metric, std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InvalidArgument("dissimilarity: vectors differ in length");
  return metric_info(metric).kernel(p, q);
}

double dissimilarity(Metric metric, const ComparisonVectors& v) {
  return dissimilarity(metric, v.p, v.q);
}

double graph_dissimilarity(Metric metric, const Graph& epoch, const Graph& global) {
  if (epoch.levels().size() == global.levels().size() &&
      std::equal(epoch.levels().begin(), epoch.levels().end(), global.levels().begin())) {
    return dissimilarity(metric, vectorize(epoch, global, metric));
  }
  const auto levels = union_levels(epoch.levels(), global.levels());
  const Graph e = resize(epoch, levels);
  if (levels.size() == global.size()) return dissimilarity(metric, vectorize(e, global, metric));
  return dissimilarity(metric, vectorize(e, resize(global, levels), metric));
}

}  // namespace tegdet
