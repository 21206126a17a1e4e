#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sctrl/structured.hpp"

namespace sctrl {

/// Bipartite graph with left nodes 0..left_count-1 and right nodes
/// 0..right_count-1. Adjacency is stored from the left.
class BipartiteGraph {
 public:
  BipartiteGraph(Index left_count, Index right_count);

  Index left_count() const { return static_cast<Index>(adj_.size()); }
  Index right_count() const { return right_count_; }

  /// Throws IndexOutOfRange on bad indices; duplicate edges are ignored.
  void add_edge(Index left, Index right);
  bool has_edge(Index left, Index right) const;
  const std::vector<Index>& neighbors(Index left) const {
    return adj_[static_cast<std::size_t>(left)];
  }
  Index edge_count() const;

 private:
  Index right_count_;
  std::vector<std::vector<Index>> adj_;
};

inline constexpr Index kUnmatched = -1;

struct Matching {
  std::vector<Index> left_to_right;  // kUnmatched when free
  std::vector<Index> right_to_left;

  Index size() const;
  std::vector<std::pair<Index, Index>> pairs() const;  // ascending by left
};

/// Right-side set whose left neighbourhood is strictly smaller than itself.
struct HallViolator {
  std::vector<Index> right_set;     // ascending
  std::vector<Index> neighborhood;  // ascending
};

/// Maximum-cardinality matching by Hopcroft-Karp, O(sqrt(V) E). Nodes are
/// scanned in index order, so the result is a deterministic function of the
/// graph.
Matching max_matching(const BipartiteGraph& graph);

/// Canonical Hall violator: the right nodes reachable by alternating paths
/// from unmatched right nodes, with their (matched) left neighbourhood.
/// Returns nullopt when the matching saturates the right side. Throws
/// NotMaximum if an augmenting path exists and std::invalid_argument if
/// `matching` is not a matching of `graph`.
std::optional<HallViolator> hall_violator(const BipartiteGraph& graph, const Matching& matching);

}  // namespace sctrl
