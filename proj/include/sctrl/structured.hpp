#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sctrl {

using Index = Eigen::Index;

/// Which matrix of a subsystem pair an entry lives in.
enum class Block { A, B };

struct Position {
  Index row = 0;
  Index col = 0;
  auto operator<=>(const Position&) const = default;
};

/// Identity of one free parameter of a switched system. All indices are
/// 0-based; text renderings add one.
struct ParamId {
  std::string name;
  Index subsystem = 0;
  Block block = Block::A;
  Position position;
  bool operator==(const ParamId&) const = default;
};

/// Sparsity pattern whose entries are fixed zeros or named free parameters.
/// Only free entries are stored.
class StructuredMatrix {
 public:
  using Entries = std::map<Position, std::string>;

  StructuredMatrix() = default;
  StructuredMatrix(Index rows, Index cols);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  /// Marks (row, col) free with the given parameter name. Throws
  /// IndexOutOfRange when the position is outside the matrix.
  void set_free(Index row, Index col, std::string name);
  bool is_free(Index row, Index col) const;
  const Entries& entries() const { return entries_; }
  Index free_count() const { return static_cast<Index>(entries_.size()); }

  bool operator==(const StructuredMatrix&) const = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Entries entries_;
};

struct Subsystem {
  StructuredMatrix a;  // n x n
  StructuredMatrix b;  // n x r
  bool operator==(const Subsystem&) const = default;
};

/// m subsystem pairs (A_i, B_i) sharing state dimension n and input
/// dimension r. Construction does not validate; see validate().
class SwitchedSystem {
 public:
  SwitchedSystem() = default;
  SwitchedSystem(Index n, Index r, std::vector<Subsystem> subsystems);

  Index n() const { return n_; }
  Index r() const { return r_; }
  Index m() const { return static_cast<Index>(subsystems_.size()); }

  const Subsystem& subsystem(Index i) const;
  std::span<const Subsystem> subsystems() const { return subsystems_; }

  /// All free parameters ordered by (subsystem, block, row, col).
  std::vector<ParamId> parameters() const;

  bool operator==(const SwitchedSystem&) const = default;

 private:
  Index n_ = 0;
  Index r_ = 0;
  std::vector<Subsystem> subsystems_;
};

/// Name given to a "*" cell: p{subsystem}_{row}_{col}, 1-based, where the
/// column counts across the block row [A_i, B_i] so A and B entries of the
/// same subsystem never collide.
std::string auto_param_name(Index subsystem, Block block, Index row, Index col, Index n);

/// Incremental construction helper; unnamed entries get auto_param_name().
class SystemBuilder {
 public:
  SystemBuilder(Index n, Index r, Index m);

  SystemBuilder& free_a(Index subsystem, Index row, Index col, std::string name = {});
  SystemBuilder& free_b(Index subsystem, Index row, Index col, std::string name = {});
  SwitchedSystem build() const;

 private:
  Index n_;
  Index r_;
  std::vector<Subsystem> subsystems_;
};

/// Throws EmptySystem, DimensionMismatch or DuplicateParameter when the
/// system is not well formed.
void validate(const SwitchedSystem& system);

/// n x (n+r) pattern of [A_1+...+A_m, B_1+...+B_m]. Entry names are fresh:
/// "s_{row}_{col}" (1-based).
StructuredMatrix sum_pattern(const SwitchedSystem& system);

/// n x m(n+r) pattern [A_1, ..., A_m, B_1, ..., B_m] keeping the original
/// parameter names.
StructuredMatrix stacked_pattern(const SwitchedSystem& system);

}  // namespace sctrl
