#include "sctrl/oracle.hpp"

#include <cstdlib>
#include <stdexcept>

#include "sctrl/errors.hpp"
#include "sctrl/rng.hpp"

namespace sctrl {

Realization realize(const SwitchedSystem& system, std::uint64_t seed) {
  const Index n = system.n();
  const Index r = system.r();
  Realization real;
  for (Index i = 0; i < system.m(); ++i) {
    real.a.push_back(MatrixX<Fp>::Zero(n, n));
    real.b.push_back(MatrixX<Fp>::Zero(n, r));
  }
  Rng rng(seed);
  for (const auto& p : system.parameters()) {
    const Fp value = Fp::from_u64(1 + rng.below(kOraclePrime - 1));
    real.assignment.emplace(p.name, value);
    auto& target = p.block == Block::A ? real.a[static_cast<std::size_t>(p.subsystem)]
                                       : real.b[static_cast<std::size_t>(p.subsystem)];
    target(p.position.row, p.position.col) = value;
  }
  return real;
}

SubspaceBasis controllable_subspace(const Realization& real) {
  const Index n = real.n();
  EchelonBasis<Fp> basis(n);
  std::vector<VectorX<Fp>> frontier;
  for (const auto& b : real.b) {
    for (Index j = 0; j < b.cols(); ++j) {
      if (basis.insert(b.col(j))) frontier.push_back(basis.vectors().back());
    }
  }
  while (!frontier.empty() && basis.size() < n) {
    std::vector<VectorX<Fp>> next;
    for (const auto& v : frontier) {
      for (const auto& a : real.a) {
        VectorX<Fp> w = a * v;
        if (basis.insert(std::move(w))) next.push_back(basis.vectors().back());
      }
    }
    frontier = std::move(next);
  }
  return {basis.as_matrix()};
}

std::uint64_t column_budget_from_env() {
  if (const char* env = std::getenv("SCTRL_CTRB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultColumnBudget;
}

std::uint64_t ctrb_column_count(Index n, Index r, Index m) {
  constexpr std::uint64_t kMax = UINT64_MAX;
  const auto mu = static_cast<std::uint64_t>(m);
  const auto base = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(r);
  std::uint64_t level = base;  // columns contributed by words of length k
  std::uint64_t total = 0;
  for (Index k = 0; k < n; ++k) {
    if (total > kMax - level) return kMax;
    total += level;
    if (k + 1 < n) {
      if (mu != 0 && level > kMax / mu) return kMax;
      level *= mu;
    }
  }
  return total;
}

Index switched_ctrb_rank(const Realization& real, std::uint64_t budget) {
  const Index n = real.n();
  const Index m = real.m();
  const Index r = m == 0 ? 0 : real.b.front().cols();
  const std::uint64_t columns = ctrb_column_count(n, r, m);
  if (columns > budget) {
    throw BudgetExceeded("controllability matrix needs " + std::to_string(columns) +
                         " columns, budget is " + std::to_string(budget));
  }

  MatrixX<Fp> ctrb(n, static_cast<Index>(columns));
  // Level k holds W B for all words W of length k; words are extended on
  // the left, so level k+1 lists A_1 (level k), ..., A_m (level k).
  MatrixX<Fp> level(n, m * r);
  for (Index i = 0; i < m; ++i) level.middleCols(i * r, r) = real.b[static_cast<std::size_t>(i)];
  Index filled = 0;
  for (Index k = 0; k < n; ++k) {
    ctrb.middleCols(filled, level.cols()) = level;
    filled += level.cols();
    if (k + 1 == n) break;
    MatrixX<Fp> next(n, m * level.cols());
    for (Index i = 0; i < m; ++i) {
      next.middleCols(i * level.cols(), level.cols()) = real.a[static_cast<std::size_t>(i)] * level;
    }
    level = std::move(next);
  }
  return exact_rank(ctrb);
}

OracleResult run_oracle(const SwitchedSystem& system, Index trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("oracle needs at least one trial");
  OracleResult out;
  for (Index t = 0; t < trials; ++t) {
    const auto real = realize(system, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const Index dim = controllable_subspace(real).dim();
    out.dims.push_back(dim);
    out.controllable = out.controllable || dim == system.n();
  }
  return out;
}

bool oracle_verdict(const SwitchedSystem& system, Index trials, std::uint64_t seed) {
  return run_oracle(system, trials, seed).controllable;
}

}  // namespace sctrl
