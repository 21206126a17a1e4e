#include "sctrl/cli.hpp"

#include <chrono>
#include <fstream>

#include <CLI11.hpp>

#include "sctrl/criteria.hpp"
#include "sctrl/errors.hpp"
#include "sctrl/graph.hpp"
#include "sctrl/io.hpp"
#include "sctrl/oracle.hpp"
#include "sctrl/rng.hpp"

namespace sctrl {

namespace {

struct Options {
  std::string file;
  bool json = false;
  Index oracle_trials = 0;
  std::uint64_t seed = 1;
  std::string graph = "colored";
  std::string output;
  Index n = 0;
  Index r = 0;
  Index m = 0;
  double density = 0.0;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

int analyze(const Options& opt, std::ostream& out) {
  const auto system = load_spec_file(opt.file);
  const auto start = std::chrono::steady_clock::now();
  auto report = make_report(system, decide(system));

  int code = report.verdict.controllable ? kExitOk : kExitUncontrollable;
  if (opt.oracle_trials > 0) {
    const auto result = run_oracle(system, opt.oracle_trials, opt.seed);
    OracleSection section;
    section.trials = opt.oracle_trials;
    section.seed = opt.seed;
    section.dims = result.dims;
    section.controllable = result.controllable;
    section.agrees = result.controllable == report.verdict.controllable;
    const Index m = system.m();
    if (ctrb_column_count(system.n(), system.r(), m) <= column_budget_from_env()) {
      section.ctrb_rank = switched_ctrb_rank(realize(system, derive_seed(opt.seed, 0)));
    }
    if (!section.agrees) code = kExitOracleMismatch;
    report.oracle = std::move(section);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  out << (opt.json ? report_to_json(report) : report_to_text(report));
  return code;
}

int export_dot_cmd(const Options& opt, std::ostream& out) {
  const auto system = load_spec_file(opt.file);
  ColoredDigraph graph;
  if (opt.graph == "union") {
    graph = union_graph(system);
  } else if (opt.graph == "colored") {
    graph = colored_union_graph(system);
  } else if (opt.graph.rfind("subsystem:", 0) == 0) {
    const std::string idx = opt.graph.substr(10);
    Index i = 0;
    try {
      std::size_t used = 0;
      i = std::stoll(idx, &used);
      if (used != idx.size()) throw std::invalid_argument(idx);
    } catch (const std::exception&) {
      throw ParseError("bad subsystem index '" + idx + "'");
    }
    graph = subsystem_graph(system, i - 1);
  } else {
    throw ParseError("unknown graph kind '" + opt.graph + "'");
  }
  write_output(opt.output, export_dot(graph), out);
  return kExitOk;
}

int gen_random_cmd(const Options& opt, std::ostream& out) {
  write_output(opt.output, render_spec(gen_random(opt.n, opt.r, opt.m, opt.density, opt.seed)),
               out);
  return kExitOk;
}

int grank_cmd(const Options& opt, std::ostream& out) {
  const auto system = load_spec_file(opt.file);
  out << "n: " << system.n() << "\n";
  out << "sum pattern g-rank: " << g_rank(sum_pattern(system)) << "\n";
  out << "stacked pattern g-rank: " << g_rank(stacked_pattern(system)) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural controllability of switched linear systems", "sctrl"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze_cmd = app.add_subcommand("analyze", "Decide structural controllability");
  analyze_cmd->add_option("file", opt.file, "System document")->required();
  analyze_cmd->add_flag("--json", opt.json, "Machine-readable report");
  analyze_cmd->add_option("--oracle", opt.oracle_trials, "Numeric cross-check trials")
      ->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--seed", opt.seed, "Oracle seed");

  auto* dot_cmd = app.add_subcommand("export-dot", "Write a graph in Graphviz format");
  dot_cmd->add_option("file", opt.file, "System document")->required();
  dot_cmd->add_option("--graph", opt.graph, "union | colored | subsystem:<i>");
  dot_cmd->add_option("-o,--output", opt.output, "Output file (default stdout)");

  auto* gen_cmd = app.add_subcommand("gen-random", "Generate a random system document");
  gen_cmd->add_option("--n", opt.n, "State dimension")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--r", opt.r, "Input dimension")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", opt.m, "Subsystem count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--density", opt.density, "Probability of a free entry")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", opt.seed, "Generator seed");
  gen_cmd->add_option("-o,--output", opt.output, "Output file (default stdout)");

  auto* grank = app.add_subcommand("gyrank", "Generic ranks of the sum and stacked patterns");
  grank->alias("grank");
  grank->add_option("file", opt.file, "System document")->required();

  std::vector<std::string> argv_store{"sctrl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sctrl: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*analyze_cmd) return analyze(opt, out);
    if (*dot_cmd) return export_dot_cmd(opt, out);
    if (*gen_cmd) return gen_random_cmd(opt, out);
    if (*grank) return grank_cmd(opt, out);
  } catch (const Error& e) {
    err << "sctrl: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "sctrl: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sctrl
