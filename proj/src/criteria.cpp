#include "sctrl/criteria.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

#include "sctrl/errors.hpp"

namespace sctrl {

Index g_rank(const StructuredMatrix& pattern) {
  BipartiteGraph g(pattern.cols(), pattern.rows());
  for (const auto& [pos, name] : pattern.entries()) g.add_edge(pos.col, pos.row);
  return max_matching(g).size();
}

UnionGraphTest theorem1_check(const SwitchedSystem& system) {
  return {accessibility(union_graph(system)).all_accessible(),
          g_rank(sum_pattern(system)) == system.n()};
}

ColoredBipartite colored_bipartite(const SwitchedSystem& system) {
  const auto graph = colored_union_graph(system);

  std::set<std::pair<Color, Vertex>> keys;
  for (const auto& [edge, colors] : graph.edges()) {
    for (Color c : colors) keys.insert({c, edge.from});
  }
  std::map<std::pair<Color, Vertex>, Index> slot;
  std::vector<std::pair<Vertex, Color>> left;
  for (const auto& key : keys) {
    slot.emplace(key, static_cast<Index>(left.size()));
    left.emplace_back(key.second, key.first);
  }

  BipartiteGraph bip(static_cast<Index>(left.size()), system.n());
  for (const auto& [edge, colors] : graph.edges()) {
    for (Color c : colors) bip.add_edge(slot.at({c, edge.from}), edge.to);
  }
  return {std::move(bip), std::move(left)};
}

namespace {

SDisjointEdgeSet edges_from(const ColoredBipartite& cb, const Matching& matching) {
  SDisjointEdgeSet out;
  for (const auto& [l, r] : matching.pairs()) {
    const auto& [vertex, color] = cb.left[static_cast<std::size_t>(l)];
    out.edges.push_back({vertex, r, color});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
    return std::tie(a.color, a.begin, a.end) < std::tie(b.color, b.begin, b.end);
  });
  return out;
}

}  // namespace

SDisjointEdgeSet max_s_disjoint(const SwitchedSystem& system) {
  const auto cb = colored_bipartite(system);
  return edges_from(cb, max_matching(cb.graph));
}

namespace {

DilationWitness witness_from(const ColoredBipartite& cb, const HallViolator& hv) {
  DilationWitness w;
  w.s_set = hv.right_set;
  w.t_size = static_cast<Index>(hv.neighborhood.size());
  for (Index l : hv.neighborhood) {
    const auto& [vertex, color] = cb.left[static_cast<std::size_t>(l)];
    w.per_color_t[color].push_back(vertex);
  }
  return w;
}

}  // namespace

std::optional<DilationWitness> find_s_dilation(const SwitchedSystem& system) {
  const auto cb = colored_bipartite(system);
  const auto matching = max_matching(cb.graph);
  const auto hv = hall_violator(cb.graph, matching);
  if (!hv) return std::nullopt;
  return witness_from(cb, *hv);
}

Verdict decide(const SwitchedSystem& system) {
  Verdict v;
  auto access = accessibility(colored_union_graph(system));
  v.accessibility_ok = access.all_accessible();

  const auto cb = colored_bipartite(system);
  const auto matching = max_matching(cb.graph);
  v.s_disjoint_count = matching.size();
  v.rank_ok = v.s_disjoint_count == system.n();
  v.controllable = v.accessibility_ok && v.rank_ok;

  const auto t1 = theorem1_check(system);
  v.theorem1_sufficient = t1.accessible && t1.dilation_free;

  if (!v.accessibility_ok) {
    v.certificate = NonaccessibleSet{access.nonaccessible};
  } else if (!v.rank_ok) {
    v.certificate = witness_from(cb, *hall_violator(cb.graph, matching));
  } else {
    ControllableCertificate cert;
    cert.edges = edges_from(cb, matching);
    cert.access = std::move(access);
    v.certificate = std::move(cert);
  }
  return v;
}

std::optional<std::vector<Index>> find_form_I_block(const SwitchedSystem& system) {
  const Index n = system.n();
  if (n > 12) {
    throw TooLarge("form I enumeration limited to n <= 12, got n = " + std::to_string(n));
  }
  // fed_from[j]: bitmask of states with a free entry into row j of the sum
  // pattern; has_input[j]: some input feeds row j.
  std::vector<std::uint32_t> fed_from(static_cast<std::size_t>(n), 0);
  std::vector<bool> has_input(static_cast<std::size_t>(n), false);
  for (const auto& sub : system.subsystems()) {
    for (const auto& [pos, name] : sub.a.entries()) {
      fed_from[static_cast<std::size_t>(pos.row)] |= std::uint32_t{1} << pos.col;
    }
    for (const auto& [pos, name] : sub.b.entries()) {
      has_input[static_cast<std::size_t>(pos.row)] = true;
    }
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t k = 1; k <= full; ++k) {
    bool closed = true;
    for (Index j = 0; j < n && closed; ++j) {
      if (!(k >> j & 1U)) continue;
      closed = !has_input[static_cast<std::size_t>(j)] &&
               (fed_from[static_cast<std::size_t>(j)] & ~k) == 0;
    }
    if (closed) {
      std::vector<Index> block;
      for (Index j = 0; j < n; ++j) {
        if (k >> j & 1U) block.push_back(j);
      }
      return block;
    }
  }
  return std::nullopt;
}

bool is_form_I_bruteforce(const SwitchedSystem& system) {
  return find_form_I_block(system).has_value();
}

}  // namespace sctrl
