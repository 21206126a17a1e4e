#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sctrl/field.hpp"
#include "sctrl/structured.hpp"

namespace sctrl {

/// Numeric values for every free parameter, drawn from {1, ..., p-1}.
struct Realization {
  std::map<std::string, Fp> assignment;
  std::vector<MatrixX<Fp>> a;  // n x n each
  std::vector<MatrixX<Fp>> b;  // n x r each
  std::uint32_t prime = kOraclePrime;

  Index n() const { return a.empty() ? 0 : a.front().rows(); }
  Index m() const { return static_cast<Index>(a.size()); }
};

struct SubspaceBasis {
  MatrixX<Fp> vectors;  // n x dim, independent columns
  Index dim() const { return vectors.cols(); }
};

/// Deterministic in (system, seed). Parameters are drawn in the order of
/// SwitchedSystem::parameters().
Realization realize(const SwitchedSystem& system, std::uint64_t seed);

/// Smallest subspace containing every Im B_i and invariant under every A_i,
/// by repeatedly applying each A_i to the vectors added in the previous
/// round until nothing new appears.
SubspaceBasis controllable_subspace(const Realization& real);

inline constexpr std::uint64_t kDefaultColumnBudget = 1'000'000;
/// Budget taken from SCTRL_CTRB_BUDGET when set, else the default.
std::uint64_t column_budget_from_env();

/// Column count of the word-expanded controllability matrix:
/// m r (1 + m + ... + m^(n-1)), saturating at UINT64_MAX.
std::uint64_t ctrb_column_count(Index n, Index r, Index m);

/// Rank of [W B_i] over all words W in A_1..A_m of length 0..n-1,
/// enumerated length first then lexicographically. Throws BudgetExceeded
/// when the matrix would have more than `budget` columns.
Index switched_ctrb_rank(const Realization& real, std::uint64_t budget = column_budget_from_env());

struct OracleResult {
  std::vector<Index> dims;  // controllable subspace dimension per trial
  bool controllable = false;
};

/// Trial t uses realize(system, derive_seed(seed, t)). Controllable iff some
/// trial reaches dimension n; a positive answer is a concrete certificate.
OracleResult run_oracle(const SwitchedSystem& system, Index trials, std::uint64_t seed);
bool oracle_verdict(const SwitchedSystem& system, Index trials, std::uint64_t seed);

}  // namespace sctrl
