#include "sctrl/structured.hpp"

#include <unordered_set>

#include "sctrl/errors.hpp"

namespace sctrl {

StructuredMatrix::StructuredMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw DimensionMismatch("structured matrix dimensions must be non-negative");
  }
}

void StructuredMatrix::set_free(Index row, Index col, std::string name) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw IndexOutOfRange("entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                          ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                          " matrix");
  }
  entries_[Position{row, col}] = std::move(name);
}

bool StructuredMatrix::is_free(Index row, Index col) const {
  return entries_.contains(Position{row, col});
}

SwitchedSystem::SwitchedSystem(Index n, Index r, std::vector<Subsystem> subsystems)
    : n_(n), r_(r), subsystems_(std::move(subsystems)) {}

const Subsystem& SwitchedSystem::subsystem(Index i) const {
  if (i < 0 || i >= m()) {
    throw IndexOutOfRange("subsystem " + std::to_string(i + 1) + " outside 1.." +
                          std::to_string(m()));
  }
  return subsystems_[static_cast<std::size_t>(i)];
}

std::vector<ParamId> SwitchedSystem::parameters() const {
  std::vector<ParamId> out;
  for (Index i = 0; i < m(); ++i) {
    const auto& sub = subsystems_[static_cast<std::size_t>(i)];
    for (const auto& [pos, name] : sub.a.entries()) {
      out.push_back({name, i, Block::A, pos});
    }
    for (const auto& [pos, name] : sub.b.entries()) {
      out.push_back({name, i, Block::B, pos});
    }
  }
  return out;
}

std::string auto_param_name(Index subsystem, Block block, Index row, Index col, Index n) {
  const Index column = block == Block::A ? col : n + col;
  return "p" + std::to_string(subsystem + 1) + "_" + std::to_string(row + 1) + "_" +
         std::to_string(column + 1);
}

SystemBuilder::SystemBuilder(Index n, Index r, Index m) : n_(n), r_(r) {
  for (Index i = 0; i < m; ++i) {
    subsystems_.push_back({StructuredMatrix(n, n), StructuredMatrix(n, r)});
  }
}

SystemBuilder& SystemBuilder::free_a(Index subsystem, Index row, Index col, std::string name) {
  if (subsystem < 0 || subsystem >= static_cast<Index>(subsystems_.size())) {
    throw IndexOutOfRange("subsystem index out of range");
  }
  if (name.empty()) {
    name = auto_param_name(subsystem, Block::A, row, col, n_);
  }
  subsystems_[static_cast<std::size_t>(subsystem)].a.set_free(row, col, std::move(name));
  return *this;
}

SystemBuilder& SystemBuilder::free_b(Index subsystem, Index row, Index col, std::string name) {
  if (subsystem < 0 || subsystem >= static_cast<Index>(subsystems_.size())) {
    throw IndexOutOfRange("subsystem index out of range");
  }
  if (name.empty()) {
    name = auto_param_name(subsystem, Block::B, row, col, n_);
  }
  subsystems_[static_cast<std::size_t>(subsystem)].b.set_free(row, col, std::move(name));
  return *this;
}

SwitchedSystem SystemBuilder::build() const { return SwitchedSystem(n_, r_, subsystems_); }

void validate(const SwitchedSystem& system) {
  if (system.m() < 1) {
    throw EmptySystem("system has no subsystems");
  }
  if (system.n() < 1) {
    throw EmptySystem("state dimension must be at least 1");
  }
  if (system.r() < 1) {
    throw EmptySystem("input dimension must be at least 1");
  }
  std::unordered_set<std::string> seen;
  for (Index i = 0; i < system.m(); ++i) {
    const auto& sub = system.subsystem(i);
    const std::string label = "subsystem " + std::to_string(i + 1);
    if (sub.a.rows() != system.n() || sub.a.cols() != system.n()) {
      throw DimensionMismatch(label + ": A is " + std::to_string(sub.a.rows()) + "x" +
                              std::to_string(sub.a.cols()) + ", expected " +
                              std::to_string(system.n()) + "x" + std::to_string(system.n()));
    }
    if (sub.b.rows() != system.n() || sub.b.cols() != system.r()) {
      throw DimensionMismatch(label + ": B is " + std::to_string(sub.b.rows()) + "x" +
                              std::to_string(sub.b.cols()) + ", expected " +
                              std::to_string(system.n()) + "x" + std::to_string(system.r()));
    }
    for (const auto* mat : {&sub.a, &sub.b}) {
      for (const auto& [pos, name] : mat->entries()) {
        if (name.empty()) {
          throw DuplicateParameter(label + ": free entry without a parameter name");
        }
        if (!seen.insert(name).second) {
          throw DuplicateParameter("parameter '" + name + "' used more than once (" + label +
                                   ")");
        }
      }
    }
  }
}

StructuredMatrix sum_pattern(const SwitchedSystem& system) {
  const Index n = system.n();
  StructuredMatrix out(n, n + system.r());
  auto mint = [&](Index row, Index col) {
    if (!out.is_free(row, col)) {
      out.set_free(row, col, "s_" + std::to_string(row + 1) + "_" + std::to_string(col + 1));
    }
  };
  for (const auto& sub : system.subsystems()) {
    for (const auto& [pos, name] : sub.a.entries()) mint(pos.row, pos.col);
    for (const auto& [pos, name] : sub.b.entries()) mint(pos.row, n + pos.col);
  }
  return out;
}

StructuredMatrix stacked_pattern(const SwitchedSystem& system) {
  const Index n = system.n();
  const Index m = system.m();
  StructuredMatrix out(n, m * (n + system.r()));
  for (Index i = 0; i < m; ++i) {
    const auto& sub = system.subsystem(i);
    for (const auto& [pos, name] : sub.a.entries()) {
      out.set_free(pos.row, i * n + pos.col, name);
    }
    for (const auto& [pos, name] : sub.b.entries()) {
      out.set_free(pos.row, m * n + i * system.r() + pos.col, name);
    }
  }
  return out;
}

}  // namespace sctrl
