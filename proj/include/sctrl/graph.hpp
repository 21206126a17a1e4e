#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sctrl/structured.hpp"

namespace sctrl {

/// A state or input vertex. Indices are 0-based and rendered as x1.., u1...
struct Vertex {
  enum class Kind { State, Input };

  Kind kind = Kind::State;
  Index index = 0;

  static Vertex state(Index i) { return {Kind::State, i}; }
  static Vertex input(Index i) { return {Kind::Input, i}; }

  bool is_state() const { return kind == Kind::State; }
  bool is_input() const { return kind == Kind::Input; }

  /// Column index of this vertex in [A, B]: states first, then inputs.
  Index column(Index n) const { return is_state() ? index : n + index; }

  std::string label() const;

  auto operator<=>(const Vertex&) const = default;
};

/// Colors are 0-based subsystem indices. Union graphs carry the single
/// sentinel color kUnionColor on every edge.
using Color = Index;
inline constexpr Color kUnionColor = -1;
using ColorSet = std::vector<Color>;  // sorted, unique, nonempty

struct Edge {
  Vertex from;
  Index to = 0;  // state index
  auto operator<=>(const Edge&) const = default;
};

/// Digraph on states and inputs whose edges are tagged by the subsystems
/// carrying them. Edges always end at a state.
class ColoredDigraph {
 public:
  using EdgeMap = std::map<Edge, ColorSet>;

  ColoredDigraph() = default;
  ColoredDigraph(Index n, Index r) : n_(n), r_(r) {}

  Index n() const { return n_; }
  Index r() const { return r_; }

  /// Adds `color` to the color set of from -> x_to.
  void add_edge(Vertex from, Index to, Color color);
  const EdgeMap& edges() const { return edges_; }
  const ColorSet* colors(Vertex from, Index to) const;

  /// Out-neighbours (state indices, ascending) of every vertex, indexed by
  /// Vertex::column().
  std::vector<std::vector<Index>> successors() const;

 private:
  Index n_ = 0;
  Index r_ = 0;
  EdgeMap edges_;
};

/// Reachability from the inputs. `parent[j]` is the predecessor of x_j on a
/// witness stem; following parents from any accessible state ends at an
/// input.
struct AccessReport {
  std::vector<Index> accessible;
  std::vector<Index> nonaccessible;
  std::vector<std::optional<Vertex>> parent;  // size n

  bool all_accessible() const { return nonaccessible.empty(); }
  /// Stem from an input to x_state (inclusive), empty if not accessible.
  std::vector<Vertex> stem_to(Index state) const;

  bool operator==(const AccessReport&) const = default;
};

/// G(A_i, B_i) with every edge colored i. Throws IndexOutOfRange.
ColoredDigraph subsystem_graph(const SwitchedSystem& system, Index i);

/// Color-blind union of all subsystem graphs.
ColoredDigraph union_graph(const SwitchedSystem& system);

/// Union of all subsystem graphs; each edge keeps the set of subsystems it
/// belongs to.
ColoredDigraph colored_union_graph(const SwitchedSystem& system);

/// Breadth-first search from all inputs at once, visiting vertices in
/// ascending index order. Colors are ignored.
AccessReport accessibility(const ColoredDigraph& graph);

/// Graphviz rendering. Deterministic for identical graphs.
std::string export_dot(const ColoredDigraph& graph);

}  // namespace sctrl
