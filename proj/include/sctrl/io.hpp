#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sctrl/criteria.hpp"
#include "sctrl/structured.hpp"

namespace sctrl {

/// Parses and validates a system document (JSON):
///
///   {"n": 3, "r": 1, "m": 2,
///    "subsystems": [{"A": [[0, 0, 0], ...], "B": [[0], [0], ["lam1"]]}, ...]}
///
/// Cells are the integer 0, the string "*" (free, auto-named) or a parameter
/// name matching [A-Za-z_][A-Za-z0-9_.]*. Throws ParseError for malformed
/// documents, EmptySystem for zero dimensions and DuplicateParameter for
/// reused names.
SwitchedSystem load_spec(std::string_view text);
SwitchedSystem load_spec_file(const std::string& path);

/// Inverse of load_spec. Parameters whose name equals the auto-generated
/// one are written as "*".
std::string render_spec(const SwitchedSystem& system);

/// Every entry of every A_i and B_i (subsystem by subsystem, A then B,
/// row-major) is free with probability `density`, one Rng::unit() draw per
/// entry from Rng(seed).
SwitchedSystem gen_random(Index n, Index r, Index m, double density, std::uint64_t seed);

struct OracleSection {
  Index trials = 0;
  std::uint64_t seed = 0;
  std::vector<Index> dims;
  bool controllable = false;
  bool agrees = false;
  std::optional<Index> ctrb_rank;  // first trial, when within the column budget
  bool operator==(const OracleSection&) const = default;
};

struct AnalysisReport {
  Index n = 0;
  Index r = 0;
  Index m = 0;
  Index parameters = 0;
  Verdict verdict;
  std::optional<OracleSection> oracle;
  double elapsed_ms = 0.0;
  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport make_report(const SwitchedSystem& system, const Verdict& verdict);

std::string report_to_json(const AnalysisReport& report);
/// Throws ParseError when the text is not a report produced by
/// report_to_json.
AnalysisReport report_from_json(std::string_view text);
std::string report_to_text(const AnalysisReport& report);

/// Parses "x3" / "u1" labels.
Vertex parse_vertex_label(std::string_view label);

}  // namespace sctrl
