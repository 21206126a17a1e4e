#include "sctrl/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "sctrl/errors.hpp"

namespace sctrl {

BipartiteGraph::BipartiteGraph(Index left_count, Index right_count)
    : right_count_(right_count), adj_(static_cast<std::size_t>(left_count)) {
  if (left_count < 0 || right_count < 0) {
    throw IndexOutOfRange("bipartite graph sizes must be non-negative");
  }
}

void BipartiteGraph::add_edge(Index left, Index right) {
  if (left < 0 || left >= left_count() || right < 0 || right >= right_count_) {
    throw IndexOutOfRange("bipartite edge endpoint out of range");
  }
  auto& nb = adj_[static_cast<std::size_t>(left)];
  auto it = std::lower_bound(nb.begin(), nb.end(), right);
  if (it == nb.end() || *it != right) nb.insert(it, right);
}

bool BipartiteGraph::has_edge(Index left, Index right) const {
  if (left < 0 || left >= left_count()) return false;
  const auto& nb = adj_[static_cast<std::size_t>(left)];
  return std::binary_search(nb.begin(), nb.end(), right);
}

Index BipartiteGraph::edge_count() const {
  Index total = 0;
  for (const auto& nb : adj_) total += static_cast<Index>(nb.size());
  return total;
}

Index Matching::size() const {
  return static_cast<Index>(
      std::count_if(left_to_right.begin(), left_to_right.end(),
                    [](Index r) { return r != kUnmatched; }));
}

std::vector<std::pair<Index, Index>> Matching::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (std::size_t l = 0; l < left_to_right.size(); ++l) {
    if (left_to_right[l] != kUnmatched) out.emplace_back(static_cast<Index>(l), left_to_right[l]);
  }
  return out;
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        left_count_(static_cast<std::size_t>(g.left_count())),
        dist_(left_count_),
        cursor_(left_count_) {
    m_.left_to_right.assign(left_count_, kUnmatched);
    m_.right_to_left.assign(static_cast<std::size_t>(g.right_count()), kUnmatched);
  }

  Matching run() {
    while (layer()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (std::size_t l = 0; l < left_count_; ++l) {
        if (m_.left_to_right[l] == kUnmatched) augment(static_cast<Index>(l));
      }
    }
    return std::move(m_);
  }

 private:
  static constexpr Index kInf = std::numeric_limits<Index>::max();

  // BFS layering from free left nodes; true if some free right node is
  // reachable.
  bool layer() {
    std::deque<Index> queue;
    for (std::size_t l = 0; l < left_count_; ++l) {
      if (m_.left_to_right[l] == kUnmatched) {
        dist_[l] = 0;
        queue.push_back(static_cast<Index>(l));
      } else {
        dist_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const Index l = queue.front();
      queue.pop_front();
      for (Index r : g_.neighbors(l)) {
        const Index next = m_.right_to_left[static_cast<std::size_t>(r)];
        if (next == kUnmatched) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(next)] == kInf) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(l)] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  // Depth-first search along the layers. Recursion depth is bounded by the
  // length of the shortest augmenting path.
  bool augment(Index l) {
    const auto& nb = g_.neighbors(l);
    auto& cur = cursor_[static_cast<std::size_t>(l)];
    for (; cur < nb.size(); ++cur) {
      const Index r = nb[cur];
      const Index next = m_.right_to_left[static_cast<std::size_t>(r)];
      if (next == kUnmatched ||
          (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(l)] + 1 &&
           augment(next))) {
        m_.left_to_right[static_cast<std::size_t>(l)] = r;
        m_.right_to_left[static_cast<std::size_t>(r)] = l;
        ++cur;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(l)] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::size_t left_count_;
  std::vector<Index> dist_;
  std::vector<std::size_t> cursor_;
  Matching m_;
};

void check_is_matching(const BipartiteGraph& g, const Matching& m) {
  if (static_cast<Index>(m.left_to_right.size()) != g.left_count() ||
      static_cast<Index>(m.right_to_left.size()) != g.right_count()) {
    throw std::invalid_argument("matching size does not fit the graph");
  }
  for (std::size_t l = 0; l < m.left_to_right.size(); ++l) {
    const Index r = m.left_to_right[l];
    if (r == kUnmatched) continue;
    if (!g.has_edge(static_cast<Index>(l), r) ||
        m.right_to_left[static_cast<std::size_t>(r)] != static_cast<Index>(l)) {
      throw std::invalid_argument("matching pair is not a consistent graph edge");
    }
  }
  for (std::size_t r = 0; r < m.right_to_left.size(); ++r) {
    const Index l = m.right_to_left[r];
    if (l != kUnmatched && m.left_to_right[static_cast<std::size_t>(l)] != static_cast<Index>(r)) {
      throw std::invalid_argument("matching is not symmetric");
    }
  }
}

}  // namespace

Matching max_matching(const BipartiteGraph& graph) { return HopcroftKarp(graph).run(); }

std::optional<HallViolator> hall_violator(const BipartiteGraph& graph, const Matching& matching) {
  check_is_matching(graph, matching);

  std::vector<std::vector<Index>> into(static_cast<std::size_t>(graph.right_count()));
  for (Index l = 0; l < graph.left_count(); ++l) {
    for (Index r : graph.neighbors(l)) into[static_cast<std::size_t>(r)].push_back(l);
  }

  std::vector<bool> right_seen(static_cast<std::size_t>(graph.right_count()), false);
  std::vector<bool> left_seen(static_cast<std::size_t>(graph.left_count()), false);
  std::deque<Index> queue;
  for (Index r = 0; r < graph.right_count(); ++r) {
    if (matching.right_to_left[static_cast<std::size_t>(r)] == kUnmatched) {
      right_seen[static_cast<std::size_t>(r)] = true;
      queue.push_back(r);
    }
  }
  if (queue.empty()) return std::nullopt;

  while (!queue.empty()) {
    const Index r = queue.front();
    queue.pop_front();
    for (Index l : into[static_cast<std::size_t>(r)]) {
      if (left_seen[static_cast<std::size_t>(l)]) continue;
      left_seen[static_cast<std::size_t>(l)] = true;
      const Index mate = matching.left_to_right[static_cast<std::size_t>(l)];
      if (mate == kUnmatched) {
        throw NotMaximum("augmenting path found: matching is not maximum");
      }
      if (!right_seen[static_cast<std::size_t>(mate)]) {
        right_seen[static_cast<std::size_t>(mate)] = true;
        queue.push_back(mate);
      }
    }
  }

  HallViolator out;
  for (Index r = 0; r < graph.right_count(); ++r) {
    if (right_seen[static_cast<std::size_t>(r)]) out.right_set.push_back(r);
  }
  for (Index l = 0; l < graph.left_count(); ++l) {
    if (left_seen[static_cast<std::size_t>(l)]) out.neighborhood.push_back(l);
  }
  return out;
}

}  // namespace sctrl
