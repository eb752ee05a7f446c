#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tegdet/data.hpp"

namespace tegdet {

using Count = std::int64_t;

/// Directed weighted graph over discretization levels.
///
/// Nodes are the strictly increasing `levels`; `weights[i]` is the number of
/// occurrences of `levels[i]` and `adjacency` is the row-major |L|x|L| matrix
/// of transition counts. Graphs produced by resize() use kWildcard (-1) for
/// the weights, rows and columns of inserted nodes, which keeps them apart
/// from 0 (node present, edge absent).
class Graph {
 public:
  static constexpr Count kWildcard = -1;

  Graph() = default;
  Graph(std::vector<Level> levels, std::vector<Count> weights, std::vector<Count> adjacency);

  std::size_t size() const { return levels_.size(); }
  std::span<const Level> levels() const { return levels_; }
  std::span<const Count> weights() const { return weights_; }
  std::span<const Count> adjacency() const { return adjacency_; }
  Count edge(std::size_t row, std::size_t col) const { return adjacency_[row * size() + col]; }

  bool has_wildcards() const;

  /// Position of `level` in levels(), or size() when absent.
  std::size_t index_of(Level level) const;

  Count total_weight() const;
  Count total_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Level> levels_;
  std::vector<Count> weights_;
  std::vector<Count> adjacency_;
};

using GraphSequence = std::vector<Graph>;

/// Builds the graph of one epoch: nodes are the distinct levels with their
/// occurrence counts, edges count consecutive transitions (self-loops included).
Graph generate_graph(std::span<const Level> epoch_levels);

/// Splits the series into floor(N/s) epochs of s observations and generates
/// one graph per epoch. Trailing N mod s observations are dropped.
GraphSequence discover_tegs(const DiscreteSeries& series, std::size_t obs_per_epoch);
GraphSequence discover_tegs(std::span<const Level> levels, std::size_t obs_per_epoch);

/// Node-wise and edge-wise sum over the union of both level sets.
Graph sum_graphs(const Graph& a, const Graph& b);

/// Left fold of sum_graphs over the sequence.
Graph global_graph(std::span<const Graph> graphs);

/// Expands `g` to `levels` (a sorted superset of g.levels()), inserting
/// wildcard nodes, rows and columns. Existing counts are untouched.
Graph resize(const Graph& g, std::span<const Level> levels);

/// Sorted union of two strictly increasing level lists.
std::vector<Level> union_levels(std::span<const Level> a, std::span<const Level> b);

}  // namespace tegdet
