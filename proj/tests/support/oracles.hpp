#pragma once

// Reference implementations used only by tests. They follow the textbook
// definitions term by term and share no code with the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tegdet::oracle {

/// Level of x under the equal-width scheme, found by scanning the interval
/// bounds min + i*(max-min)/n one by one.
inline int discretize(double min, double max, int n, double x) {
  if (x < min) return n;
  if (x >= max) return n + 1;
  const double width = (max - min) / n;
  for (int i = 0; i < n; ++i) {
    const double lo = min + i * width;
    const double hi = i + 1 == n ? max : min + (i + 1) * width;
    if (x >= lo && x < hi) return i;
  }
  return n - 1;  // x lands in the rounding gap just below max
}

/// Dense graph over an explicit level universe: counts indexed by level value.
struct DenseGraph {
  std::map<int, long long> weights;
  std::map<std::pair<int, int>, long long> edges;
};

inline DenseGraph build_dense(const std::vector<int>& epoch) {
  DenseGraph g;
  for (std::size_t k = 0; k < epoch.size(); ++k) {
    g.weights[epoch[k]] += 1;
    if (k + 1 < epoch.size()) g.edges[{epoch[k], epoch[k + 1]}] += 1;
  }
  return g;
}

inline DenseGraph add_dense(const DenseGraph& a, const DenseGraph& b) {
  DenseGraph out = a;
  for (const auto& [l, w] : b.weights) out.weights[l] += w;
  for (const auto& [e, w] : b.edges) out.edges[e] += w;
  return out;
}

/// (100-alpha)-th percentile with linear interpolation, computed directly
/// from sorted ranks.
inline double percentile(std::vector<double> x, int alpha) {
  std::sort(x.begin(), x.end());
  const long double q = (100.0L - alpha) / 100.0L;
  const long double rank = q * static_cast<long double>(x.size() - 1);
  const auto lo = static_cast<std::size_t>(rank);
  if (lo + 1 >= x.size()) return x.back();
  const long double frac = rank - lo;
  return static_cast<double>(x[lo] + frac * (static_cast<long double>(x[lo + 1]) - x[lo]));
}

using V = std::vector<double>;
using Ld = long double;

inline Ld safe_div(Ld num, Ld den) { return den == 0 ? 0 : num / den; }

inline double kl_base2(const V& p, const V& q) {
  Ld s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0 && q[i] > 0) s += p[i] * (std::log(static_cast<Ld>(p[i]) / q[i]) / std::log(2.0L));
  }
  return static_cast<double>(s);
}

/// Straightforward evaluation of each dissimilarity formula, with the same
/// zero conventions as the library (skip zero denominators and log terms
/// touching zero; +inf becomes the largest double).
inline double metric(const std::string& name, const V& p, const V& q) {
  const std::size_t n = p.size();
  Ld a = 0, b = 0, c = 0;
  if (name == "Hamming") {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((p[i] > 0 && q[i] > 0) || (p[i] == 0 && q[i] == 0)) ++hits;
    }
    return 1.0 - static_cast<double>(hits) / static_cast<double>(n);
  }
  if (name == "Cosine") {
    for (std::size_t i = 0; i < n; ++i) {
      a += Ld(p[i]) * q[i];
      b += Ld(p[i]) * p[i];
      c += Ld(q[i]) * q[i];
    }
    return static_cast<double>(std::max<Ld>(0, 1 - safe_div(a, std::sqrt(b) * std::sqrt(c))));
  }
  if (name == "Jaccard" || name == "Dice") {
    Ld d2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d2 += (Ld(p[i]) - q[i]) * (Ld(p[i]) - q[i]);
      a += Ld(p[i]) * p[i];
      b += Ld(q[i]) * q[i];
      c += Ld(p[i]) * q[i];
    }
    return static_cast<double>(name == "Jaccard" ? safe_div(d2, a + b - c) : safe_div(d2, a + b));
  }
  if (name == "KL") return kl_base2(p, q);
  if (name == "Jeffreys") {
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] > 0 && q[i] > 0) a += (Ld(p[i]) - q[i]) * std::log(Ld(p[i]) / q[i]);
    }
    return static_cast<double>(a);
  }
  if (name == "JS") {
    V m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = (p[i] + q[i]) / 2;
    return std::sqrt((kl_base2(p, m) + kl_base2(q, m)) / 2);
  }
  if (name == "Euclidean" || name == "Cityblock" || name == "Chebyshev" || name == "Minkowski" ||
      name == "Gower" || name == "Lorentzian") {
    Ld mx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Ld d = std::fabs(Ld(p[i]) - q[i]);
      a += d * d;
      b += d;
      c += d * d * d;
      mx = std::max(mx, d);
    }
    if (name == "Euclidean") return static_cast<double>(std::sqrt(a));
    if (name == "Cityblock") return static_cast<double>(b);
    if (name == "Chebyshev") return static_cast<double>(mx);
    if (name == "Minkowski") return static_cast<double>(std::pow(c, 1.0L / 3.0L));
    if (name == "Gower") return static_cast<double>(b / n);
    Ld s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::log(1 + std::fabs(Ld(p[i]) - q[i]));
    return static_cast<double>(s);
  }
  if (name == "Braycurtis" || name == "Soergel" || name == "Kulczynski") {
    Ld num = 0, sum = 0, mx = 0, mn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      num += std::fabs(Ld(p[i]) - q[i]);
      sum += Ld(p[i]) + q[i];
      mx += std::max(p[i], q[i]);
      mn += std::min(p[i], q[i]);
    }
    if (name == "Braycurtis") return static_cast<double>(safe_div(num, sum));
    if (name == "Soergel") return static_cast<double>(safe_div(num, mx));
    if (mn == 0) return num == 0 ? 0.0 : std::numeric_limits<double>::max();
    return static_cast<double>(num / mn);
  }
  if (name == "Canberra") {
    for (std::size_t i = 0; i < n; ++i) a += safe_div(std::fabs(Ld(p[i]) - q[i]), Ld(p[i]) + q[i]);
    return static_cast<double>(a);
  }
  if (name == "Bhattacharyya" || name == "Hellinger" || name == "Matusita") {
    for (std::size_t i = 0; i < n; ++i) a += std::sqrt(Ld(p[i]) * q[i]);
    if (name == "Bhattacharyya") {
      return a == 0 ? std::numeric_limits<double>::max() : static_cast<double>(std::max<Ld>(0, -std::log(a)));
    }
    if (name == "Hellinger") return static_cast<double>(2 * std::sqrt(std::max<Ld>(0, 1 - a)));
    return static_cast<double>(std::sqrt(std::max<Ld>(0, 2 - 2 * a)));
  }
  if (name == "Squaredchord") {
    for (std::size_t i = 0; i < n; ++i) {
      const Ld d = std::sqrt(Ld(p[i])) - std::sqrt(Ld(q[i]));
      a += d * d;
    }
    return static_cast<double>(a);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Ld d2 = (Ld(p[i]) - q[i]) * (Ld(p[i]) - q[i]);
    const Ld sum = Ld(p[i]) + q[i];
    if (name == "Pearson") a += safe_div(d2, q[i]);
    else if (name == "Neyman") a += safe_div(d2, p[i]);
    else if (name == "Squared") a += safe_div(d2, sum);
    else if (name == "Probsymmetric") a += 2 * safe_div(d2, sum);
    else if (name == "Divergence") a += 2 * safe_div(d2, sum * sum);
    else if (name == "Clark") a += safe_div(d2, sum * sum);
    else if (name == "Additivesymmetric") a += safe_div(d2 * sum, Ld(p[i]) * q[i]);
    else throw std::invalid_argument("oracle: unknown metric " + name);
  }
  if (name == "Clark") return static_cast<double>(std::sqrt(a));
  return static_cast<double>(a);
}

}  // namespace tegdet::oracle
