#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "sctrl/graph.hpp"
#include "sctrl/matching.hpp"
#include "sctrl/structured.hpp"

namespace sctrl {

/// One edge of the colored union graph used under a specific color.
struct ColoredEdge {
  Vertex begin;
  Index end = 0;  // state index
  Color color = 0;
  auto operator<=>(const ColoredEdge&) const = default;
};

/// Edges with pairwise distinct end vertices and, among those sharing a
/// begin vertex, pairwise distinct colors. Sorted by (color, begin, end).
struct SDisjointEdgeSet {
  std::vector<ColoredEdge> edges;
  bool operator==(const SDisjointEdgeSet&) const = default;
};

/// State set S whose colored in-neighbourhood T(S) = sum_i |T_i(S)| is
/// smaller than S.
struct DilationWitness {
  std::vector<Index> s_set;
  Index t_size = 0;
  std::map<Color, std::vector<Vertex>> per_color_t;  // only nonempty colors
  bool operator==(const DilationWitness&) const = default;
};

struct NonaccessibleSet {
  std::vector<Index> states;
  bool operator==(const NonaccessibleSet&) const = default;
};

struct ControllableCertificate {
  SDisjointEdgeSet edges;
  AccessReport access;
  bool operator==(const ControllableCertificate&) const = default;
};

/// When both conditions fail the certificate is the nonaccessible set.
using Certificate = std::variant<NonaccessibleSet, DilationWitness, ControllableCertificate>;

struct Verdict {
  bool controllable = false;
  bool accessibility_ok = false;
  bool rank_ok = false;
  bool theorem1_sufficient = false;  // union-graph sufficient test
  Index s_disjoint_count = 0;
  Certificate certificate;
  bool operator==(const Verdict&) const = default;
};

struct UnionGraphTest {
  bool accessible = false;
  bool dilation_free = false;
};

/// Generic rank of a pattern: maximum matching between rows and columns on
/// the free entries.
Index g_rank(const StructuredMatrix& pattern);

/// Accessibility of the union graph and full generic rank of the sum
/// pattern. Both true is sufficient (not necessary) for controllability.
UnionGraphTest theorem1_check(const SwitchedSystem& system);

/// Bipartite graph whose left nodes are the (vertex, color) pairs with an
/// outgoing edge of that color, i.e. the nonzero columns of the stacked
/// pattern, and whose right nodes are the states.
struct ColoredBipartite {
  BipartiteGraph graph;
  std::vector<std::pair<Vertex, Color>> left;  // ascending by (color, begin)
};
ColoredBipartite colored_bipartite(const SwitchedSystem& system);

/// Maximum S-disjoint edge set of the colored union graph.
SDisjointEdgeSet max_s_disjoint(const SwitchedSystem& system);

/// None iff the colored union graph has n S-disjoint edges.
std::optional<DilationWitness> find_s_dilation(const SwitchedSystem& system);

Verdict decide(const SwitchedSystem& system);

/// Exhaustive search for a nonempty state set K that receives no free entry
/// of the sum pattern from states outside K and none from any input.
/// Returns K as ascending state indices. Throws TooLarge for n > 12.
std::optional<std::vector<Index>> find_form_I_block(const SwitchedSystem& system);
bool is_form_I_bruteforce(const SwitchedSystem& system);

}  // namespace sctrl
