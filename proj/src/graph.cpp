#include "tegdet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tegdet/error.hpp"

namespace tegdet {

Graph::Graph(std::vector<Level> levels, std::vector<Count> weights, std::vector<Count> adjacency)
    : levels_(std::move(levels)), weights_(std::move(weights)), adjacency_(std::move(adjacency)) {
  const auto n = levels_.size();
  if (weights_.size() != n) throw InvalidArgument("graph: weights and levels differ in length");
  if (adjacency_.size() != n * n) throw InvalidArgument("graph: adjacency is not |L|x|L|");
  if (std::adjacent_find(levels_.begin(), levels_.end(), std::greater_equal<>{}) != levels_.end()) {
    throw InvalidArgument("graph: levels must be strictly increasing");
  }
  auto below = [](Count c) { return c < kWildcard; };
  if (std::any_of(weights_.begin(), weights_.end(), below) ||
      std::any_of(adjacency_.begin(), adjacency_.end(), below)) {
    throw InvalidArgument("graph: counts must be >= -1");
  }
}

bool Graph::has_wildcards() const {
  auto wild = [](Count c) { return c == kWildcard; };
  return std::any_of(weights_.begin(), weights_.end(), wild) ||
         std::any_of(adjacency_.begin(), adjacency_.end(), wild);
}

std::size_t Graph::index_of(Level level) const {
  const auto it = std::lower_bound(levels_.begin(), levels_.end(), level);
  if (it == levels_.end() || *it != level) return size();
  return static_cast<std::size_t>(it - levels_.begin());
}

Count Graph::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), Count{0}); }

Count Graph::total_edges() const {
  return std::accumulate(adjacency_.begin(), adjacency_.end(), Count{0});
}

Graph generate_graph(std::span<const Level> epoch_levels) {
  if (epoch_levels.empty()) throw InvalidArgument("generate_graph: empty epoch");

  std::vector<Level> levels(epoch_levels.begin(), epoch_levels.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const auto n = levels.size();

  // Map each observation to its node index once.
  std::vector<std::size_t> index(epoch_levels.size());
  for (std::size_t k = 0; k < epoch_levels.size(); ++k) {
    index[k] = static_cast<std::size_t>(
        std::lower_bound(levels.begin(), levels.end(), epoch_levels[k]) - levels.begin());
  }

  std::vector<Count> weights(n, 0);
  std::vector<Count> adjacency(n * n, 0);
  for (std::size_t k = 0; k < index.size(); ++k) {
    ++weights[index[k]];
    if (k + 1 < index.size()) ++adjacency[index[k] * n + index[k + 1]];
  }
  return Graph(std::move(levels), std::move(weights), std::move(adjacency));
}

GraphSequence discover_tegs(std::span<const Level> levels, std::size_t obs_per_epoch) {
  if (obs_per_epoch == 0) throw InvalidArgument("observations per epoch must be >= 1");
  const auto epochs = levels.size() / obs_per_epoch;
  if (epochs == 0) {
    throw DataError("series of " + std::to_string(levels.size()) +
                    " observations is shorter than one epoch of " + std::to_string(obs_per_epoch));
  }
  GraphSequence graphs;
  graphs.reserve(epochs);
  for (std::size_t j = 0; j < epochs; ++j) {
    graphs.push_back(generate_graph(levels.subspan(j * obs_per_epoch, obs_per_epoch)));
  }
  return graphs;
}

GraphSequence discover_tegs(const DiscreteSeries& series, std::size_t obs_per_epoch) {
  return discover_tegs(series.levels(), obs_per_epoch);
}

std::vector<Level> union_levels(std::span<const Level> a, std::span<const Level> b) {
  std::vector<Level> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Graph sum_graphs(const Graph& a, const Graph& b) {
  if (a.has_wildcards() || b.has_wildcards()) {
    throw InvalidArgument("sum_graphs: inputs must not contain wildcards");
  }
  auto levels = union_levels(a.levels(), b.levels());
  const auto n = levels.size();
  std::vector<Count> weights(n, 0);
  std::vector<Count> adjacency(n * n, 0);

  // An entry belongs to a graph only when it holds both endpoints, so adding
  // each graph's own block covers all three cases of the definition.
  auto add = [&](const Graph& g) {
    std::vector<std::size_t> pos(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      pos[i] = static_cast<std::size_t>(
          std::lower_bound(levels.begin(), levels.end(), g.levels()[i]) - levels.begin());
      weights[pos[i]] += g.weights()[i];
    }
    for (std::size_t r = 0; r < g.size(); ++r) {
      for (std::size_t c = 0; c < g.size(); ++c) adjacency[pos[r] * n + pos[c]] += g.edge(r, c);
    }
  };
  add(a);
  add(b);
  return Graph(std::move(levels), std::move(weights), std::move(adjacency));
}

Graph global_graph(std::span<const Graph> graphs) {
  if (graphs.empty()) throw InvalidArgument("global_graph: empty graph sequence");
  Graph acc = graphs.front();
  if (acc.has_wildcards()) throw InvalidArgument("global_graph: inputs must not contain wildcards");
  for (std::size_t j = 1; j < graphs.size(); ++j) acc = sum_graphs(acc, graphs[j]);
  return acc;
}

Graph resize(const Graph& g, std::span<const Level> levels) {
  if (std::adjacent_find(levels.begin(), levels.end(), std::greater_equal<>{}) != levels.end()) {
    throw InvalidArgument("resize: target levels must be strictly increasing");
  }
  if (levels.size() == g.size() && std::equal(levels.begin(), levels.end(), g.levels().begin())) {
    return g;
  }
  const auto n = levels.size();
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto it = std::lower_bound(levels.begin(), levels.end(), g.levels()[i]);
    if (it == levels.end() || *it != g.levels()[i]) {
      throw InvalidArgument("resize: level " + std::to_string(g.levels()[i]) +
                            " is not among the target levels");
    }
    pos[i] = static_cast<std::size_t>(it - levels.begin());
  }

  std::vector<Count> weights(n, Graph::kWildcard);
  std::vector<Count> adjacency(n * n, Graph::kWildcard);
  for (std::size_t r = 0; r < g.size(); ++r) {
    weights[pos[r]] = g.weights()[r];
    for (std::size_t c = 0; c < g.size(); ++c) adjacency[pos[r] * n + pos[c]] = g.edge(r, c);
  }
  return Graph(std::vector<Level>(levels.begin(), levels.end()), std::move(weights),
               std::move(adjacency));
}

}  // namespace tegdet
