#include "sctrl/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "sctrl/errors.hpp"

namespace sctrl {

std::string Vertex::label() const {
  return (is_state() ? "x" : "u") + std::to_string(index + 1);
}

void ColoredDigraph::add_edge(Vertex from, Index to, Color color) {
  auto& colors = edges_[Edge{from, to}];
  auto it = std::lower_bound(colors.begin(), colors.end(), color);
  if (it == colors.end() || *it != color) {
    colors.insert(it, color);
  }
}

const ColorSet* ColoredDigraph::colors(Vertex from, Index to) const {
  auto it = edges_.find(Edge{from, to});
  return it == edges_.end() ? nullptr : &it->second;
}

std::vector<std::vector<Index>> ColoredDigraph::successors() const {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(n_ + r_));
  // Map order is (from, to), so each list comes out sorted.
  for (const auto& [edge, colors] : edges_) {
    out[static_cast<std::size_t>(edge.from.column(n_))].push_back(edge.to);
  }
  return out;
}

std::vector<Vertex> AccessReport::stem_to(Index state) const {
  std::vector<Vertex> path;
  if (!parent[static_cast<std::size_t>(state)]) return path;
  Vertex v = Vertex::state(state);
  path.push_back(v);
  while (v.is_state()) {
    v = *parent[static_cast<std::size_t>(v.index)];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

void add_subsystem_edges(ColoredDigraph& graph, const Subsystem& sub, Color color) {
  for (const auto& [pos, name] : sub.a.entries()) {
    graph.add_edge(Vertex::state(pos.col), pos.row, color);
  }
  for (const auto& [pos, name] : sub.b.entries()) {
    graph.add_edge(Vertex::input(pos.col), pos.row, color);
  }
}

}  // namespace

ColoredDigraph subsystem_graph(const SwitchedSystem& system, Index i) {
  ColoredDigraph graph(system.n(), system.r());
  add_subsystem_edges(graph, system.subsystem(i), i);
  return graph;
}

ColoredDigraph union_graph(const SwitchedSystem& system) {
  ColoredDigraph graph(system.n(), system.r());
  for (const auto& sub : system.subsystems()) {
    add_subsystem_edges(graph, sub, kUnionColor);
  }
  return graph;
}

ColoredDigraph colored_union_graph(const SwitchedSystem& system) {
  ColoredDigraph graph(system.n(), system.r());
  for (Index i = 0; i < system.m(); ++i) {
    add_subsystem_edges(graph, system.subsystem(i), i);
  }
  return graph;
}

AccessReport accessibility(const ColoredDigraph& graph) {
  const Index n = graph.n();
  const auto succ = graph.successors();
  AccessReport report;
  report.parent.assign(static_cast<std::size_t>(n), std::nullopt);

  std::deque<Vertex> queue;
  for (Index u = 0; u < graph.r(); ++u) queue.push_back(Vertex::input(u));
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Index w : succ[static_cast<std::size_t>(v.column(n))]) {
      auto& p = report.parent[static_cast<std::size_t>(w)];
      if (!p) {
        p = v;
        queue.push_back(Vertex::state(w));
      }
    }
  }
  for (Index j = 0; j < n; ++j) {
    (report.parent[static_cast<std::size_t>(j)] ? report.accessible : report.nonaccessible)
        .push_back(j);
  }
  return report;
}

std::string export_dot(const ColoredDigraph& graph) {
  static constexpr std::array<const char*, 8> kPalette = {
      "black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"};

  std::ostringstream out;
  out << "digraph G {\n  rankdir=LR;\n";
  for (Index u = 0; u < graph.r(); ++u) {
    out << "  " << Vertex::input(u).label() << " [shape=box];\n";
  }
  for (Index x = 0; x < graph.n(); ++x) {
    out << "  " << Vertex::state(x).label() << " [shape=circle];\n";
  }
  for (const auto& [edge, colors] : graph.edges()) {
    out << "  " << edge.from.label() << " -> " << Vertex::state(edge.to).label();
    if (colors.size() == 1 && colors.front() == kUnionColor) {
      out << ";\n";
      continue;
    }
    out << " [label=\"";
    for (std::size_t k = 0; k < colors.size(); ++k) {
      out << (k ? "," : "") << colors[k] + 1;
    }
    out << "\", color=\"";
    for (std::size_t k = 0; k < colors.size(); ++k) {
      out << (k ? ":" : "") << kPalette[static_cast<std::size_t>(colors[k]) % kPalette.size()];
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sctrl
