#pragma once

// Reference examples and brute-force reference routines shared by the unit and
// acceptance suites. Nothing here calls into the matching or criteria code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "sctrl/structured.hpp"

namespace sctrl::testing {

// Two subsystems on three states and one input: B_1 = lambda1 e3,
// A_2(2,3) = lambda2, B_2 = lambda3 e1.
inline SwitchedSystem example1_system() {
  return SystemBuilder(3, 1, 2)
      .free_b(0, 2, 0, "lambda1")
      .free_a(1, 1, 2, "lambda2")
      .free_b(1, 0, 0, "lambda3")
      .build();
}

// Zero A matrices, B_1 = [l1; l2], B_2 = [l3; l4].
inline SwitchedSystem second_example() {
  return SystemBuilder(2, 1, 2)
      .free_b(0, 0, 0, "lambda1")
      .free_b(0, 1, 0, "lambda2")
      .free_b(1, 0, 0, "lambda3")
      .free_b(1, 1, 0, "lambda4")
      .build();
}

// Same as second_example() but B_2 reuses lambda1, lambda2.
inline SwitchedSystem dependent_example() {
  return SystemBuilder(2, 1, 2)
      .free_b(0, 0, 0, "lambda1")
      .free_b(0, 1, 0, "lambda2")
      .free_b(1, 0, 0, "lambda1")
      .free_b(1, 1, 0, "lambda2")
      .build();
}

/// Dense 0/1 support of one subsystem: a[row][col], b[row][col].
struct DenseSupport {
  std::vector<std::vector<bool>> a;
  std::vector<std::vector<bool>> b;
};

inline std::vector<DenseSupport> dense_supports(const SwitchedSystem& s) {
  std::vector<DenseSupport> out;
  for (const auto& sub : s.subsystems()) {
    DenseSupport d;
    d.a.assign(static_cast<std::size_t>(s.n()), std::vector<bool>(static_cast<std::size_t>(s.n())));
    d.b.assign(static_cast<std::size_t>(s.n()), std::vector<bool>(static_cast<std::size_t>(s.r())));
    for (const auto& [p, name] : sub.a.entries()) d.a[p.row][p.col] = true;
    for (const auto& [p, name] : sub.b.entries()) d.b[p.row][p.col] = true;
    out.push_back(std::move(d));
  }
  return out;
}

/// Exhaustive maximum matching on an adjacency matrix adj[left][right].
inline int brute_max_matching(const std::vector<std::vector<bool>>& adj, int right_count) {
  const int left_count = static_cast<int>(adj.size());
  std::vector<bool> used(static_cast<std::size_t>(right_count), false);
  std::function<int(int)> go = [&](int l) -> int {
    if (l == left_count) return 0;
    int best = go(l + 1);
    for (int r = 0; r < right_count; ++r) {
      if (adj[l][r] && !used[r]) {
        used[r] = true;
        best = std::max(best, 1 + go(l + 1));
        used[r] = false;
      }
    }
    return best;
  };
  return go(0);
}

/// Largest set of free entries with no two in the same row or column.
inline int brute_s_rank(const StructuredMatrix& p) {
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(p.rows()),
                                     std::vector<bool>(static_cast<std::size_t>(p.cols())));
  for (const auto& [pos, name] : p.entries()) adj[pos.row][pos.col] = true;
  return brute_max_matching(adj, static_cast<int>(p.cols()));
}

/// |T(S)| = sum_i |T_i(S)| computed straight from the matrices.
inline int colored_in_degree(const SwitchedSystem& s, std::uint32_t subset) {
  int total = 0;
  for (const auto& d : dense_supports(s)) {
    for (Index v = 0; v < s.n() + s.r(); ++v) {
      bool points_in = false;
      for (Index j = 0; j < s.n() && !points_in; ++j) {
        if (!(subset >> j & 1U)) continue;
        points_in = v < s.n() ? d.a[j][v] : d.b[j][v - s.n()];
      }
      total += points_in ? 1 : 0;
    }
  }
  return total;
}

/// Enumerates every nonempty state set S and checks |T(S)| < |S|.
inline bool brute_has_s_dilation(const SwitchedSystem& s) {
  const std::uint32_t full = (std::uint32_t{1} << s.n()) - 1;
  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    if (colored_in_degree(s, subset) < std::popcount(subset)) return true;
  }
  return false;
}

/// States reachable from the inputs by depth-first search on the raw
/// entries, ignoring which subsystem carries each edge.
inline std::vector<bool> brute_reachable(const SwitchedSystem& s) {
  const auto supports = dense_supports(s);
  std::vector<bool> seen(static_cast<std::size_t>(s.n()), false);
  std::vector<Index> stack;
  for (const auto& d : supports) {
    for (Index j = 0; j < s.n(); ++j) {
      for (Index u = 0; u < s.r(); ++u) {
        if (d.b[j][u] && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  while (!stack.empty()) {
    const Index from = stack.back();
    stack.pop_back();
    for (const auto& d : supports) {
      for (Index j = 0; j < s.n(); ++j) {
        if (d.a[j][from] && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  return seen;
}

inline bool brute_all_reachable(const SwitchedSystem& s) {
  const auto seen = brute_reachable(s);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace sctrl::testing
