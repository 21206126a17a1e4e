#include "sctrl/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <json.hpp>

#include "sctrl/errors.hpp"
#include "sctrl/rng.hpp"

namespace sctrl {

using nlohmann::json;

namespace {

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, 0, 0, path);
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!head(s.front())) return false;
  for (char c : s) {
    if (!head(c) && !(c >= '0' && c <= '9') && c != '.') return false;
  }
  return true;
}

Index read_count(const json& doc, const char* key) {
  const std::string path = std::string("/") + key;
  if (!doc.contains(key)) fail(path, "missing field");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<Index>();
}

class PatternReader {
 public:
  explicit PatternReader(Index n) : n_(n) {}

  StructuredMatrix read(const json& rows, Index cols, Index subsystem, Block block,
                        const std::string& path) {
    StructuredMatrix out(n_, cols);
    if (!rows.is_array()) fail(path, "expected an array of rows");
    if (static_cast<Index>(rows.size()) != n_) {
      fail(path, "expected " + std::to_string(n_) + " rows, got " + std::to_string(rows.size()));
    }
    for (Index i = 0; i < n_; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      const std::string row_path = path + "/" + std::to_string(i);
      if (!row.is_array()) fail(row_path, "expected an array of cells");
      if (static_cast<Index>(row.size()) != cols) {
        fail(row_path,
             "expected " + std::to_string(cols) + " cells, got " + std::to_string(row.size()));
      }
      for (Index j = 0; j < cols; ++j) {
        const auto& cell = row[static_cast<std::size_t>(j)];
        const std::string cell_path = row_path + "/" + std::to_string(j);
        if (cell.is_number_integer() && cell.get<std::int64_t>() == 0) continue;
        if (cell.is_number()) {
          fail(cell_path, "fixed nonzero entries are not supported; use 0 or a free parameter");
        }
        if (!cell.is_string()) fail(cell_path, "expected 0, \"*\" or a parameter name");
        std::string name = cell.get<std::string>();
        if (name == "*") {
          name = auto_param_name(subsystem, block, i, j, n_);
        } else if (!valid_name(name)) {
          fail(cell_path, "invalid parameter name '" + name + "'");
        }
        auto [it, fresh] = seen_.emplace(name, cell_path);
        if (!fresh) {
          throw DuplicateParameter("parameter '" + name + "' at " + cell_path +
                                   " already used at " + it->second);
        }
        out.set_free(i, j, std::move(name));
      }
    }
    return out;
  }

 private:
  Index n_;
  std::map<std::string, std::string> seen_;
};

}  // namespace

SwitchedSystem load_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what(),
                     line, col);
  }
  if (!doc.is_object()) fail("", "expected a JSON object");

  const Index n = read_count(doc, "n");
  const Index r = read_count(doc, "r");
  const Index m = read_count(doc, "m");
  if (n == 0 || r == 0 || m == 0) {
    throw EmptySystem("n, r and m must all be at least 1");
  }
  if (!doc.contains("subsystems") || !doc.at("subsystems").is_array()) {
    fail("/subsystems", "expected an array");
  }
  const auto& subs = doc.at("subsystems");
  if (static_cast<Index>(subs.size()) != m) {
    fail("/subsystems", "header says m = " + std::to_string(m) + " but " +
                            std::to_string(subs.size()) + " subsystems are given");
  }

  PatternReader reader(n);
  std::vector<Subsystem> subsystems;
  for (Index i = 0; i < m; ++i) {
    const auto& s = subs[static_cast<std::size_t>(i)];
    const std::string path = "/subsystems/" + std::to_string(i);
    if (!s.is_object()) fail(path, "expected an object with A and B");
    if (!s.contains("A")) fail(path + "/A", "missing field");
    if (!s.contains("B")) fail(path + "/B", "missing field");
    Subsystem sub;
    sub.a = reader.read(s.at("A"), n, i, Block::A, path + "/A");
    sub.b = reader.read(s.at("B"), r, i, Block::B, path + "/B");
    subsystems.push_back(std::move(sub));
  }
  SwitchedSystem system(n, r, std::move(subsystems));
  validate(system);
  return system;
}

SwitchedSystem load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec(buf.str());
}

namespace {

void render_pattern(std::ostream& out, const StructuredMatrix& p, Index subsystem, Block block,
                    Index n) {
  out << "[";
  for (Index i = 0; i < p.rows(); ++i) {
    out << (i ? ", " : "") << "[";
    for (Index j = 0; j < p.cols(); ++j) {
      out << (j ? ", " : "");
      auto it = p.entries().find(Position{i, j});
      if (it == p.entries().end()) {
        out << "0";
      } else if (it->second == auto_param_name(subsystem, block, i, j, n)) {
        out << "\"*\"";
      } else {
        out << json(it->second).dump();
      }
    }
    out << "]";
  }
  out << "]";
}

}  // namespace

std::string render_spec(const SwitchedSystem& system) {
  std::ostringstream out;
  out << "{\n  \"n\": " << system.n() << ",\n  \"r\": " << system.r() << ",\n  \"m\": "
      << system.m() << ",\n  \"subsystems\": [";
  for (Index i = 0; i < system.m(); ++i) {
    const auto& sub = system.subsystem(i);
    out << (i ? "," : "") << "\n    {\n      \"A\": ";
    render_pattern(out, sub.a, i, Block::A, system.n());
    out << ",\n      \"B\": ";
    render_pattern(out, sub.b, i, Block::B, system.n());
    out << "\n    }";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

SwitchedSystem gen_random(Index n, Index r, Index m, double density, std::uint64_t seed) {
  if (n < 1 || r < 1 || m < 1) throw EmptySystem("gen_random needs n, r, m >= 1");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  Rng rng(seed);
  SystemBuilder builder(n, r, m);
  for (Index i = 0; i < m; ++i) {
    for (Index row = 0; row < n; ++row) {
      for (Index col = 0; col < n; ++col) {
        if (rng.bernoulli(density)) builder.free_a(i, row, col);
      }
    }
    for (Index row = 0; row < n; ++row) {
      for (Index col = 0; col < r; ++col) {
        if (rng.bernoulli(density)) builder.free_b(i, row, col);
      }
    }
  }
  return builder.build();
}

AnalysisReport make_report(const SwitchedSystem& system, const Verdict& verdict) {
  AnalysisReport report;
  report.n = system.n();
  report.r = system.r();
  report.m = system.m();
  report.parameters = static_cast<Index>(system.parameters().size());
  report.verdict = verdict;
  return report;
}

Vertex parse_vertex_label(std::string_view label) {
  if (label.size() < 2 || (label[0] != 'x' && label[0] != 'u')) {
    throw ParseError("bad vertex label '" + std::string(label) + "'");
  }
  Index idx = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') throw ParseError("bad vertex label '" + std::string(label) + "'");
    idx = idx * 10 + (c - '0');
  }
  if (idx < 1) throw ParseError("bad vertex label '" + std::string(label) + "'");
  return label[0] == 'x' ? Vertex::state(idx - 1) : Vertex::input(idx - 1);
}

namespace {

json states_json(const std::vector<Index>& states) {
  json out = json::array();
  for (Index s : states) out.push_back(Vertex::state(s).label());
  return out;
}

std::vector<Index> states_from(const json& j) {
  std::vector<Index> out;
  for (const auto& s : j) {
    const Vertex v = parse_vertex_label(s.get<std::string>());
    if (!v.is_state()) throw ParseError("expected a state label");
    out.push_back(v.index);
  }
  return out;
}

json vertices_json(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.label());
  return out;
}

json certificate_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, NonaccessibleSet>) {
          return {{"kind", "nonaccessible_set"}, {"states", states_json(c.states)}};
        } else if constexpr (std::is_same_v<T, DilationWitness>) {
          json per = json::object();
          for (const auto& [color, vs] : c.per_color_t) {
            per[std::to_string(color + 1)] = vertices_json(vs);
          }
          return {{"kind", "s_dilation"},
                  {"s_set", states_json(c.s_set)},
                  {"t_size", c.t_size},
                  {"per_color_t", per}};
        } else {
          json edges = json::array();
          for (const auto& e : c.edges.edges) {
            edges.push_back({{"begin", e.begin.label()},
                             {"end", Vertex::state(e.end).label()},
                             {"color", e.color + 1}});
          }
          json parent = json::array();
          for (const auto& p : c.access.parent) {
            parent.push_back(p ? json(p->label()) : json(nullptr));
          }
          return {{"kind", "s_disjoint_edges"},
                  {"edges", edges},
                  {"accessible", states_json(c.access.accessible)},
                  {"nonaccessible", states_json(c.access.nonaccessible)},
                  {"parent", parent}};
        }
      },
      cert);
}

Certificate certificate_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "nonaccessible_set") {
    return NonaccessibleSet{states_from(j.at("states"))};
  }
  if (kind == "s_dilation") {
    DilationWitness w;
    w.s_set = states_from(j.at("s_set"));
    w.t_size = j.at("t_size").get<Index>();
    for (const auto& [key, vs] : j.at("per_color_t").items()) {
      auto& list = w.per_color_t[std::stoll(key) - 1];
      for (const auto& v : vs) list.push_back(parse_vertex_label(v.get<std::string>()));
    }
    return w;
  }
  if (kind == "s_disjoint_edges") {
    ControllableCertificate c;
    for (const auto& e : j.at("edges")) {
      c.edges.edges.push_back({parse_vertex_label(e.at("begin").get<std::string>()),
                               parse_vertex_label(e.at("end").get<std::string>()).index,
                               e.at("color").get<Index>() - 1});
    }
    c.access.accessible = states_from(j.at("accessible"));
    c.access.nonaccessible = states_from(j.at("nonaccessible"));
    for (const auto& p : j.at("parent")) {
      c.access.parent.push_back(p.is_null() ? std::nullopt
                                            : std::optional(parse_vertex_label(p.get<std::string>())));
    }
    return c;
  }
  throw ParseError("unknown certificate kind '" + kind + "'");
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  const auto& v = report.verdict;
  json j = {{"n", report.n},
            {"r", report.r},
            {"m", report.m},
            {"parameters", report.parameters},
            {"controllable", v.controllable},
            {"accessibility_ok", v.accessibility_ok},
            {"rank_ok", v.rank_ok},
            {"theorem1_sufficient", v.theorem1_sufficient},
            {"s_disjoint_count", v.s_disjoint_count},
            {"certificate", certificate_json(v.certificate)},
            {"elapsed_ms", report.elapsed_ms}};
  if (report.oracle) {
    const auto& o = *report.oracle;
    j["oracle"] = {{"trials", o.trials},
                   {"seed", o.seed},
                   {"dims", o.dims},
                   {"controllable", o.controllable},
                   {"agrees", o.agrees},
                   {"ctrb_rank", o.ctrb_rank ? json(*o.ctrb_rank) : json(nullptr)}};
  }
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text.begin(), text.end());
    AnalysisReport report;
    report.n = j.at("n").get<Index>();
    report.r = j.at("r").get<Index>();
    report.m = j.at("m").get<Index>();
    report.parameters = j.at("parameters").get<Index>();
    auto& v = report.verdict;
    v.controllable = j.at("controllable").get<bool>();
    v.accessibility_ok = j.at("accessibility_ok").get<bool>();
    v.rank_ok = j.at("rank_ok").get<bool>();
    v.theorem1_sufficient = j.at("theorem1_sufficient").get<bool>();
    v.s_disjoint_count = j.at("s_disjoint_count").get<Index>();
    v.certificate = certificate_from(j.at("certificate"));
    report.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("oracle")) {
      const auto& o = j.at("oracle");
      OracleSection s;
      s.trials = o.at("trials").get<Index>();
      s.seed = o.at("seed").get<std::uint64_t>();
      s.dims = o.at("dims").get<std::vector<Index>>();
      s.controllable = o.at("controllable").get<bool>();
      s.agrees = o.at("agrees").get<bool>();
      if (!o.at("ctrb_rank").is_null()) s.ctrb_rank = o.at("ctrb_rank").get<Index>();
      report.oracle = std::move(s);
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const AnalysisReport& report) {
  const auto& v = report.verdict;
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "system: n=" << report.n << " r=" << report.r << " m=" << report.m << ", "
      << report.parameters << " free parameters\n";
  out << "structurally controllable: " << yes(v.controllable) << "\n";
  out << "  all states accessible:   " << yes(v.accessibility_ok) << "\n";
  out << "  S-disjoint edges:        " << v.s_disjoint_count << " / " << report.n << "\n";
  out << "  union-graph sufficient:  " << yes(v.theorem1_sufficient) << "\n";

  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, NonaccessibleSet>) {
          out << "certificate: nonaccessible states {";
          for (std::size_t k = 0; k < c.states.size(); ++k) {
            out << (k ? ", " : "") << Vertex::state(c.states[k]).label();
          }
          out << "}\n";
        } else if constexpr (std::is_same_v<T, DilationWitness>) {
          out << "certificate: S-dilation S = {";
          for (std::size_t k = 0; k < c.s_set.size(); ++k) {
            out << (k ? ", " : "") << Vertex::state(c.s_set[k]).label();
          }
          out << "}, |T(S)| = " << c.t_size << " < " << c.s_set.size() << "\n";
          for (const auto& [color, vs] : c.per_color_t) {
            out << "  T_" << color + 1 << "(S) = {";
            for (std::size_t k = 0; k < vs.size(); ++k) out << (k ? ", " : "") << vs[k].label();
            out << "}\n";
          }
        } else {
          out << "certificate: " << c.edges.edges.size() << " S-disjoint edges\n";
          for (const auto& e : c.edges.edges) {
            out << "  " << e.begin.label() << " -> " << Vertex::state(e.end).label()
                << "  (subsystem " << e.color + 1 << ")\n";
          }
          out << "  stems:\n";
          for (Index s : c.access.accessible) {
            out << "   ";
            for (const auto& vtx : c.access.stem_to(s)) out << " " << vtx.label();
            out << "\n";
          }
        }
      },
      v.certificate);

  if (report.oracle) {
    const auto& o = *report.oracle;
    Index full = 0;
    for (Index d : o.dims) full += d == report.n ? 1 : 0;
    out << "oracle: " << full << "/" << o.trials << " trials at dim " << report.n
        << " (seed " << o.seed << "), verdict " << yes(o.controllable) << ", agrees "
        << yes(o.agrees) << "\n";
    out << "  dims:";
    for (Index d : o.dims) out << " " << d;
    out << "\n";
    if (o.ctrb_rank) out << "  controllability-matrix rank (trial 1): " << *o.ctrb_rank << "\n";
  }
  out << "elapsed: " << report.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace sctrl
