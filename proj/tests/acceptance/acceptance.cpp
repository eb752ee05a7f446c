// Acceptance suite: one PASS/FAIL/SKIP line per criterion.
//
//   acceptance [--only golden|spectrum|performance|properties|csv] [--dataset DIR]
//
// DIR must hold training.csv, test_normal.csv and test_anomalous.csv (the
// public smart-meter energy dataset). Criteria that need it report SKIP when
// it is absent. Exit status: 0 all ran criteria passed, 1 any failure, 77 when
// nothing failed but something was skipped.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "synthetic.hpp"
#include "tegdet/data.hpp"
#include "tegdet/detector.hpp"
#include "tegdet/graph.hpp"
#include "tegdet/metrics.hpp"
#include "tegdet/model_io.hpp"
#include "tegdet/results.hpp"
#include "tegdet/sweep.hpp"

namespace fs = std::filesystem;
using namespace tegdet;

namespace {

enum class Status { Pass, Fail, Skip };

struct Tally {
  int pass = 0, fail = 0, skip = 0;

  void report(const std::string& id, Status s, const std::string& detail) {
    const char* tag = s == Status::Pass ? "PASS" : s == Status::Fail ? "FAIL" : "SKIP";
    std::cout << '[' << tag << "] " << id << ": " << detail << std::endl;
    (s == Status::Pass ? pass : s == Status::Fail ? fail : skip) += 1;
  }
  void check(const std::string& id, bool ok, const std::string& detail) {
    report(id, ok ? Status::Pass : Status::Fail, detail);
  }
};

struct Dataset {
  TimeSeries train;
  TimeSeries normal;
  TimeSeries anomalous;
  std::string origin;
};

bool has_dataset(const fs::path& dir) {
  return fs::exists(dir / "training.csv") && fs::exists(dir / "test_normal.csv") &&
         fs::exists(dir / "test_anomalous.csv");
}

Dataset load(const fs::path& dir, std::string origin) {
  return {load_dataset(dir / "training.csv"), load_dataset(dir / "test_normal.csv"),
          load_dataset(dir / "test_anomalous.csv"), std::move(origin)};
}

std::string fmt(const ConfusionMatrix& c) {
  std::ostringstream os;
  os << "{tp:" << c.tp << ", tn:" << c.tn << ", fp:" << c.fp << ", fn:" << c.fn << '}';
  return os.str();
}

std::string fixed(double x, int prec = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << x;
  return os.str();
}

struct Evaluation {
  ConfusionMatrix normal;
  ConfusionMatrix anomalous;
  double time_to_build = 0.0;
  double predict_normal = 0.0;
  double predict_anomalous = 0.0;
};

Evaluation evaluate(const Dataset& ds, const DetectorParams& params) {
  Evaluation e;
  const auto model = build_model(ds.train, params);
  e.time_to_build = model.time_to_build;
  const auto n = predict(model, ds.normal);
  const auto a = predict(model, ds.anomalous);
  e.predict_normal = n.time_to_predict;
  e.predict_anomalous = a.time_to_predict;
  e.normal = compute_confusion_matrix(ground_truth_vector(GroundTruth::Normal, n.n_periods), n.outliers);
  e.anomalous = compute_confusion_matrix(ground_truth_vector(GroundTruth::Anomalous, a.n_periods), a.outliers);
  return e;
}

// Number of epochs that must be relabelled to turn matrix `a` into `b` for
// the same ground truth.
long long reclassifications(const ConfusionMatrix& a, const ConfusionMatrix& b) {
  return std::abs(a.tp - b.tp) + std::abs(a.fp - b.fp);
}

// ---------------------------------------------------------------- criterion 1

void golden(Tally& t, const fs::path& dir) {
  const std::string id = "1 golden reproduction (Hamming, 30/336/5)";
  if (!has_dataset(dir)) {
    t.report(id, Status::Skip, "energy dataset not found in " + dir.string());
    return;
  }
  const auto ds = load(dir, dir.string());
  const auto e = evaluate(ds, DetectorParams{Metric::Hamming, 30, 336, 5});
  const ConfusionMatrix want_normal{0, 14, 1, 0}, want_anomalous{10, 0, 0, 5};
  const auto dn = reclassifications(e.normal, want_normal);
  const auto da = reclassifications(e.anomalous, want_anomalous);
  const std::string detail = "normal " + fmt(e.normal) + " anomalous " + fmt(e.anomalous);
  if (dn == 0 && da == 0) {
    t.report(id, Status::Pass, detail + " (exact)");
  } else {
    t.check(id, dn <= 1 && da <= 1,
            detail + " (differs from the reference by " + std::to_string(dn) + " and " +
                std::to_string(da) + " epochs; at most one each allowed)");
  }
}

// ---------------------------------------------------------------- criterion 2

void spectrum(Tally& t, const fs::path& dir) {
  const std::string id = "2 accuracy spectrum (28 metrics, defaults)";
  if (!has_dataset(dir)) {
    t.report(id, Status::Skip, "energy dataset not found in " + dir.string());
    return;
  }
  const auto ds = load(dir, dir.string());
  std::map<std::string, double> acc;
  for (const auto& info : metric_registry()) {
    const auto e = evaluate(ds, DetectorParams{info.id, 30, 336, 5});
    acc[std::string(info.name)] = accuracy(e.normal + e.anomalous);
  }
  const double tol = 1.0 / 30.0 + 1e-12;
  struct Expect {
    const char* metric;
    double target;
    double tolerance;
  };
  const std::vector<Expect> expectations{
      {"Clark", 1.00, tol},      {"Divergence", 1.00, tol}, {"Dice", 0.37, 0.04},
      {"Jaccard", 0.37, 0.04},   {"Lorentzian", 0.43, 0.04}, {"Hamming", 0.80, 0.04},
  };
  for (const auto& x : expectations) {
    const double got = acc.at(x.metric);
    t.check(id + " " + x.metric, std::abs(got - x.target) <= x.tolerance,
            "accuracy " + fixed(got) + ", expected " + fixed(x.target, 2) + " +/- " + fixed(x.tolerance, 3));
  }
}

// ---------------------------------------------------------------- criterion 3

void performance(Tally& t, const fs::path& dir) {
  const std::string id = "3 performance";
  Dataset ds = [&] {
    if (has_dataset(dir)) return load(dir, "energy dataset");
    const auto tmp = testing::scratch_dir("acceptance_perf");
    testing::write_energy_like_dataset(tmp, 1);
    auto d = load(tmp, "synthetic stand-in of the same shape (energy dataset absent)");
    fs::remove_all(tmp);
    return d;
  }();
  std::cout << "  input: " << ds.origin << " (" << ds.train.size() << " train rows)" << std::endl;

  evaluate(ds, DetectorParams{Metric::Hamming, 30, 336, 5});  // warm-up
  std::vector<double> build, pred;
  double worst_build = 0.0, worst_predict = 0.0;
  for (const auto& info : metric_registry()) {
    const auto e = evaluate(ds, DetectorParams{info.id, 30, 336, 5});
    build.push_back(e.time_to_build);
    pred.push_back(e.predict_normal);
    pred.push_back(e.predict_anomalous);
    worst_build = std::max(worst_build, e.time_to_build);
    worst_predict = std::max({worst_predict, e.predict_normal, e.predict_anomalous});
  }
  t.check(id + " build time", worst_build <= 2.0,
          "max time_to_build " + fixed(worst_build * 1e3, 3) + " ms (limit 2000 ms)");
  t.check(id + " predict time", worst_predict <= 0.5,
          "max time_to_predict " + fixed(worst_predict * 1e3, 3) + " ms (limit 500 ms)");
  const double mb = std::accumulate(build.begin(), build.end(), 0.0) / build.size();
  const double mp = std::accumulate(pred.begin(), pred.end(), 0.0) / pred.size();
  const double ratio = mb / mp;
  t.check(id + " build/predict ratio", ratio >= 2.5 && ratio <= 6.0,
          "mean build " + fixed(mb * 1e3, 3) + " ms / mean predict " + fixed(mp * 1e3, 3) +
              " ms = " + fixed(ratio, 2) + " (bounds [2.5, 6])");
}

// ---------------------------------------------------------------- criterion 4

std::vector<Level> random_epoch(std::mt19937_64& rng, int max_len, int max_level) {
  std::uniform_int_distribution<int> len(1, max_len), lvl(0, max_level);
  std::vector<Level> e(len(rng));
  for (auto& x : e) x = lvl(rng);
  return e;
}

std::string first_failure;

bool note(bool ok, const std::string& what) {
  if (!ok && first_failure.empty()) first_failure = what;
  return ok;
}

void properties_discretization(Tally& t) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> bound(-1e3, 1e3);
  std::uniform_int_distribution<int> nd(1, 60);
  bool monotone = true, no_level_n = true, total = true;
  for (int trial = 0; trial < 1000; ++trial) {
    double a = bound(rng), b = bound(rng);
    if (a > b) std::swap(a, b);
    const int n = nd(rng);
    const Discretizer d(a, b, n);

    std::uniform_real_distribution<double> inside(a, b);
    std::vector<double> xs(50);
    for (auto& x : xs) x = inside(rng);
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (xs[i] < b) monotone &= note(d.level(xs[i - 1]) <= d.level(xs[i]), "monotonicity");
    }

    std::vector<double> train(40);
    for (auto& x : train) x = bound(rng);
    const auto ts = TimeSeries::from_values(train);
    const auto fitted = Discretizer::fit(ts, n);
    const auto ds = fitted.apply(ts);
    no_level_n &= note(std::find(ds.levels().begin(), ds.levels().end(), n) == ds.levels().end(),
                       "level n in training");

    for (double x : {-1e300, a - 1.0, a, b, b + 1e-9, 1e300, inside(rng), inside(rng)}) {
      const Level l = d.level(x);
      total &= note(l >= 0 && l <= n + 1 && l == oracle::discretize(a, b, n, x), "totality");
    }
  }
  t.check("4 properties / discretization monotone", monotone, "1000 random discretizers");
  t.check("4 properties / discretization never yields level n on training", no_level_n, "1000 random fits");
  t.check("4 properties / discretization total over the real line", total,
          "1000 random discretizers x 8 values, matched to the bound-scanning oracle");
}

void properties_graphs(Tally& t) {
  std::mt19937_64 rng(202);
  bool conserve = true;
  for (int i = 0; i < 1000; ++i) {
    const auto e = random_epoch(rng, 400, 31);
    const auto g = generate_graph(e);
    conserve &= note(g.total_weight() == static_cast<Count>(e.size()) &&
                         g.total_edges() == static_cast<Count>(e.size()) - 1,
                     "conservation");
  }
  t.check("4 properties / epoch weight conservation", conserve, "1000 random epochs: sum w = s, sum E = s-1");

  bool comm = true, assoc = true;
  for (int i = 0; i < 500; ++i) {
    const auto a = generate_graph(random_epoch(rng, 60, 12));
    const auto b = generate_graph(random_epoch(rng, 60, 12));
    const auto c = generate_graph(random_epoch(rng, 60, 12));
    comm &= note(sum_graphs(a, b) == sum_graphs(b, a), "commutativity");
    assoc &= note(sum_graphs(sum_graphs(a, b), c) == sum_graphs(a, sum_graphs(b, c)), "associativity");
  }
  t.check("4 properties / sum_graphs commutative", comm, "500 random pairs, exact");
  t.check("4 properties / sum_graphs associative", assoc, "500 random triples, exact");

  bool fold = true;
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> count(1, 40);
    GraphSequence seq(count(rng));
    oracle::DenseGraph dense;
    for (auto& g : seq) {
      const auto e = random_epoch(rng, 50, 20);
      g = generate_graph(e);
      dense = oracle::add_dense(dense, oracle::build_dense(e));
    }
    const auto left = global_graph(seq);
    // Pairwise-balanced fold.
    GraphSequence level = seq;
    while (level.size() > 1) {
      GraphSequence next;
      for (std::size_t k = 0; k + 1 < level.size(); k += 2) next.push_back(sum_graphs(level[k], level[k + 1]));
      if (level.size() % 2) next.push_back(level.back());
      level = std::move(next);
    }
    auto shuffled = seq;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    fold &= note(left == level.front() && left == global_graph(shuffled), "fold order");
    for (std::size_t r = 0; r < left.size(); ++r) {
      fold &= note(left.weights()[r] == dense.weights.at(left.levels()[r]), "fold vs dense oracle");
    }
  }
  t.check("4 properties / global fold-order independence", fold,
          "100 sequences: left fold = balanced fold = shuffled fold = dense oracle");

  bool keeps = true, idem = true, side = true;
  for (int i = 0; i < 500; ++i) {
    const auto g = generate_graph(random_epoch(rng, 40, 15));
    auto target = union_levels(g.levels(), generate_graph(random_epoch(rng, 40, 15)).levels());
    const auto r = resize(g, target);
    side &= note(r.size() == target.size(), "resize side");
    for (std::size_t a = 0; a < g.size(); ++a) {
      const auto ra = r.index_of(g.levels()[a]);
      keeps &= note(r.weights()[ra] == g.weights()[a], "resize weight");
      for (std::size_t b = 0; b < g.size(); ++b) {
        keeps &= note(r.edge(ra, r.index_of(g.levels()[b])) == g.edge(a, b), "resize edge");
      }
    }
    for (std::size_t a = 0; a < r.size(); ++a) {
      if (g.index_of(r.levels()[a]) == g.size()) {
        keeps &= note(r.weights()[a] == Graph::kWildcard, "wildcard weight");
      }
    }
    idem &= note(resize(r, target) == r, "idempotence");
  }
  t.check("4 properties / resize preserves counts", keeps, "500 random graphs");
  t.check("4 properties / resize idempotent", idem, "500 random graphs");
  t.check("4 properties / resize side = |global levels|", side, "500 random graphs");
}

bool rel_close(double got, double want, double rel) {
  if (got == want) return true;
  return std::abs(got - want) <= rel * std::max(std::abs(got), std::abs(want)) + 1e-15;
}

void properties_metrics(Tally& t) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> pos(0.001, 1.0);
  auto positive_simplex = [&](std::size_t n) {
    std::vector<double> v(n);
    double s = 0.0;
    for (auto& x : v) s += (x = pos(rng));
    for (auto& x : v) x /= s;
    return v;
  };

  bool identity = true;
  for (const auto& info : metric_registry()) {
    for (int i = 0; i < 100; ++i) {
      const auto p = positive_simplex(30);
      identity &= note(std::abs(dissimilarity(info.id, p, p)) <= 1e-12, "identity " + std::string(info.name));
    }
  }
  t.check("4 properties / metric identity", identity, "28 metrics x 100 positive vectors, |d(p,p)| <= 1e-12");

  const std::set<std::string> symmetric{
      "Euclidean", "Cityblock", "Chebyshev",  "Minkowski",     "Canberra",     "Lorentzian",
      "Clark",     "Divergence", "Jeffreys",  "JS",            "Squaredchord", "Hellinger",
      "Matusita",  "Bhattacharyya", "Braycurtis", "Gower",      "Soergel",      "Kulczynski",
      "Squared",   "Probsymmetric", "Additivesymmetric", "Cosine", "Jaccard",  "Dice",
      "Hamming"};
  bool sym = symmetric.size() == 25;
  for (const auto& info : metric_registry()) {
    const bool expect = symmetric.count(std::string(info.name)) > 0;
    sym &= note(info.symmetric == expect, "registry symmetry flag " + std::string(info.name));
    if (!expect) continue;
    for (int i = 0; i < 100; ++i) {
      const auto p = positive_simplex(30), q = positive_simplex(30);
      sym &= note(std::abs(dissimilarity(info.id, p, q) - dissimilarity(info.id, q, p)) <= 1e-12,
                  "symmetry " + std::string(info.name));
    }
  }
  t.check("4 properties / metric symmetry", sym, "25 symmetric metrics x 100 pairs, within 1e-12");

  // Oracle equivalence on vectors prepared from random graph pairs, so every
  // metric sees its real input form (wildcards, raw counts, sparse relative
  // frequencies).
  bool oracle_ok = true;
  for (const auto& info : metric_registry()) {
    for (int i = 0; i < 100; ++i) {
      auto epoch = generate_graph(random_epoch(rng, 200, 14));
      auto global = generate_graph(random_epoch(rng, 800, 14));
      if (epoch.total_edges() == 0) epoch = generate_graph(std::vector<Level>{1, 2});
      if (global.total_edges() == 0) global = generate_graph(std::vector<Level>{1, 2});
      const auto levels = union_levels(epoch.levels(), global.levels());
      const auto v = vectorize(resize(epoch, levels), resize(global, levels), info.id);
      const double got = dissimilarity(info.id, v);
      const double want = oracle::metric(std::string(info.name), v.p, v.q);
      oracle_ok &= note(rel_close(got, want, 1e-9), "oracle " + std::string(info.name));
    }
  }
  t.check("4 properties / metric oracle equivalence", oracle_ok,
          "28 metrics x 100 random graph pairs, within 1e-9 relative");

  bool relation = true, hm = true;
  for (int i = 0; i < 500; ++i) {
    const auto p = positive_simplex(25), q = positive_simplex(25);
    relation &= note(dissimilarity(Metric::Probsymmetric, p, q) == 2.0 * dissimilarity(Metric::Squared, p, q),
                     "Probsymmetric = 2 Squared");
    hm &= note(std::abs(dissimilarity(Metric::Hellinger, p, q) -
                        std::sqrt(2.0) * dissimilarity(Metric::Matusita, p, q)) <= 1e-9,
               "Hellinger = sqrt2 Matusita");
  }
  t.check("4 properties / Probsymmetric = 2 * Squared", relation, "500 pairs, exact");
  t.check("4 properties / Hellinger = sqrt(2) * Matusita", hm, "500 pairs, within 1e-9");
}

void properties_detector(Tally& t) {
  std::mt19937_64 rng(404);
  bool mono = true;
  for (int i = 0; i < 500; ++i) {
    std::uniform_int_distribution<int> len(1, 100);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::vector<double> b(len(rng));
    for (auto& x : b) x = u(rng);
    for (int a = 1; a < 99; ++a) mono &= note(threshold(b, a) >= threshold(b, a + 1), "threshold monotone");
  }
  t.check("4 properties / threshold monotone in alpha", mono, "500 random baselines, alpha 1..99");

  const auto values = testing::synthetic_consumption(30, 17);
  auto tampered = testing::swap_peak_offpeak(values);
  const auto train = TimeSeries::from_values({values.begin(), values.begin() + 20 * 336});
  const auto test = TimeSeries::from_values({tampered.begin() + 20 * 336, tampered.end()});

  bool subset = true, count_ok = true, self_ok = true;
  std::string self_detail;
  for (const auto& info : metric_registry()) {
    for (int s : {48, 168, 336}) {
      DetectorParams p{info.id, 20, s, 1};
      auto model = build_model(train, p);
      std::vector<int> previous;
      for (int a : {1, 3, 5, 8, 10, 25, 50}) {
        model.params.alpha = a;
        const auto out = predict(model, test);
        count_ok &= note(out.outliers.size() == test.size() / static_cast<std::size_t>(s) &&
                             out.n_periods == out.outliers.size(),
                         "epoch count");
        if (!previous.empty()) {
          for (std::size_t j = 0; j < out.outliers.size(); ++j) {
            subset &= note(previous[j] <= out.outliers[j], "flag subset " + std::string(info.name));
          }
        }
        previous = out.outliers;

        const auto self = predict(model, train);
        const long long flagged = std::accumulate(self.outliers.begin(), self.outliers.end(), 0LL);
        const auto bound = static_cast<long long>(
            std::ceil(a / 100.0 * static_cast<double>(model.baseline.size()))) + 1;
        self_ok &= note(flagged <= bound, "self prediction " + std::string(info.name));
      }
    }
  }
  t.check("4 properties / flagged sets nested across alpha", subset, "28 metrics x 3 epoch sizes x 7 alphas");
  t.check("4 properties / |outliers| = floor(N/s)", count_ok, "28 metrics x 3 epoch sizes");
  t.check("4 properties / self-prediction flags <= ceil(alpha% |J|) + 1", self_ok,
          "28 metrics x 3 epoch sizes x 7 alphas");
}

void properties_persistence(Tally& t) {
  std::mt19937_64 rng(505);
  const auto dir = testing::scratch_dir("acceptance_models");
  const auto metrics = metric_registry();
  std::uniform_int_distribution<std::size_t> pick(0, metrics.size() - 1);
  std::uniform_int_distribution<int> bins(1, 50), alpha(1, 99), weeks(1, 6);
  const std::vector<int> epochs{24, 48, 96, 168, 336};
  std::uniform_int_distribution<std::size_t> epoch_pick(0, epochs.size() - 1);
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const auto values = testing::synthetic_consumption(static_cast<std::size_t>(weeks(rng)), rng());
    const DetectorParams p{metrics[pick(rng)].id, bins(rng), epochs[epoch_pick(rng)], alpha(rng)};
    const auto model = build_model(TimeSeries::from_values(values), p);
    const auto path = dir / ("m" + std::to_string(i) + ".teg");
    save_model(model, path);
    ok &= note(load_model(path) == model, "round trip " + std::to_string(i));
  }
  fs::remove_all(dir);
  t.check("4 properties / model save/load round trip", ok, "50 random models, field-for-field equality");
}

void properties(Tally& t) {
  properties_discretization(t);
  properties_graphs(t);
  properties_metrics(t);
  properties_detector(t);
  properties_persistence(t);
  if (!first_failure.empty()) std::cout << "  first failing check: " << first_failure << std::endl;
}

// ---------------------------------------------------------------- criterion 5

void csv_contract(Tally& t, const fs::path& dir) {
  const std::string id = "5 CSV contract";
  const bool real = has_dataset(dir);
  const auto tmp = testing::scratch_dir("acceptance_csv");
  const fs::path data = real ? dir : tmp;
  if (!real) testing::write_energy_like_dataset(tmp, 2);

  SweepConfig cfg;
  for (const auto& info : metric_registry()) cfg.metrics.push_back(info.id);
  cfg.train = data / "training.csv";
  cfg.tests = {{data / "test_normal.csv", "normal", GroundTruth::Normal},
               {data / "test_anomalous.csv", "anomalous", GroundTruth::Anomalous}};
  const auto out = tmp / "results.csv";
  const auto result = run_sweep(cfg, 1, false);
  append_results(out, result.rows);

  std::ifstream in(out, std::ios::binary);
  std::string header;
  std::getline(in, header);
  t.check(id + " header", header == "detector,n_bins,n_obs_per_period,alpha,testing_set,time2build,time2predict,tp,tn,fp,fn",
          "'" + header + "'");

  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  bool order = lines.size() == 56 && result.failures.empty();
  const auto names = list_metrics();
  for (std::size_t i = 0; order && i < lines.size(); ++i) {
    const std::string prefix = names[i / 2] + ",30,336,5," + (i % 2 ? "anomalous," : "normal,");
    order &= lines[i].starts_with(prefix);
  }
  const auto again = run_sweep(cfg, 4, false);
  bool stable = again.rows.size() == result.rows.size();
  for (std::size_t i = 0; stable && i < again.rows.size(); ++i) {
    auto a = again.rows[i], b = result.rows[i];
    a.time2build = b.time2build = a.time2predict = b.time2predict = 0.0;
    stable &= a == b;
  }
  t.check(id + " sweep rows", order && stable,
          std::to_string(lines.size()) + " data rows (" + (real ? "energy dataset" : "synthetic data") +
              "), metric-major order, identical on a parallel re-run");
  fs::remove_all(tmp);
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  fs::path dataset = "dataset/energy";
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) only = argv[++i];
    else if (a == "--dataset" && i + 1 < argc) dataset = argv[++i];
    else {
      std::cerr << "usage: acceptance [--only golden|spectrum|performance|properties|csv] [--dataset DIR]\n";
      return 2;
    }
  }
  // The environment wins so a ctest run can be pointed elsewhere without reconfiguring.
  if (const char* env = std::getenv("TEGDET_ENERGY_DATASET")) dataset = env;

  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"golden", [&](Tally& t) { golden(t, dataset); }},
      {"spectrum", [&](Tally& t) { spectrum(t, dataset); }},
      {"performance", [&](Tally& t) { performance(t, dataset); }},
      {"properties", [&](Tally& t) { properties(t); }},
      {"csv", [&](Tally& t) { csv_contract(t, dataset); }},
  };

  Tally tally;
  bool matched = false;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && only != name) continue;
    matched = true;
    try {
      run(tally);
    } catch (const std::exception& e) {
      tally.report(name, Status::Fail, std::string("exception: ") + e.what());
    }
  }
  if (!matched) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  std::cout << "summary: " << tally.pass << " passed, " << tally.fail << " failed, " << tally.skip
            << " skipped" << std::endl;
  if (tally.fail > 0) return 1;
  return tally.skip > 0 ? 77 : 0;
}
