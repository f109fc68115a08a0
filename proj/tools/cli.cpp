#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tvsb/approx.hpp"
#include "tvsb/bench.hpp"
#include "tvsb/connectivity.hpp"
#include "tvsb/dominators.hpp"
#include "tvsb/generator.hpp"
#include "tvsb/oracle.hpp"

namespace tvsb::cli {

namespace {

std::string vertex_set(const std::vector<VertexId>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// g.txt + alg2 -> g.alg2.txt
std::string per_algorithm_path(const std::string& path, Algorithm a) {
  std::filesystem::path p(path);
  std::string name = p.stem().string() + "." + std::string(to_string(a)) + p.extension().string();
  return (p.parent_path() / name).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

struct GenArgs {
  int n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.n < 4) throw Error("n must be >= 4");
  DiGraph g = generate({a.n, a.seed});
  if (a.out_path.empty()) {
    out << serialize(g);
  } else {
    write_graph_file(a.out_path, g);
    out << g.n() << ' ' << g.m() << '\n';
  }
  return 0;
}

struct RunArgs {
  std::string alg;
  std::string in_path;
  std::string out_path;
  bool csv = false;
};

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Algorithm> algs;
  if (a.alg == "all") {
    algs = {Algorithm::alg1, Algorithm::alg2, Algorithm::alg3};
  } else if (auto parsed = parse_algorithm(a.alg)) {
    algs = {*parsed};
  } else {
    throw Error("unknown algorithm '" + a.alg + "' (expected alg1, alg2, alg3 or all)");
  }
  DiGraph g = read_graph_file(a.in_path);
  if (!is_2v_strongly_biconnected(g)) throw Error("input is not 2-vertex strongly biconnected");

  bool ok = true;
  if (a.csv) out << kCsvHeader << '\n';
  for (Algorithm alg : algs) {
    AlgoResult r = run_algorithm(alg, g);
    BenchRow row;
    row.n = g.n();
    row.m = g.m();
    row.algorithm = alg;
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
    row.edges_out = r.edges_out;
    row.feasible = verify_output(g, r.subgraph);
    ok = ok && row.feasible;
    if (a.csv) {
      out << csv_row(row) << '\n';
    } else {
      out << to_string(alg) << ": elapsed " << format_duration_ms(row.elapsed_ms) << ", edges_out " << row.edges_out
          << ", feasible " << yes_no(row.feasible);
      if (alg == Algorithm::alg1) {
        out << ", l " << r.trace.l_bap_count << ", edges_added " << r.trace.edges_added;
      } else if (alg == Algorithm::alg3) {
        out << ", phase1 " << r.trace.phase1_size;
      }
      out << '\n';
    }
    if (!a.out_path.empty()) {
      write_graph_file(algs.size() == 1 ? a.out_path : per_algorithm_path(a.out_path, alg), r.subgraph);
    }
  }
  if (!ok) err << "error: an output failed verification\n";
  return ok ? 0 : 1;
}

struct CheckArgs {
  std::string in_path;
  std::string subgraph_path;
  bool minimal = false;
  bool exact = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  DiGraph g = read_graph_file(a.in_path);
  out << "n " << g.n() << ", m " << g.m() << '\n';
  out << "strongly_connected: " << yes_no(is_strongly_connected(g)) << '\n';
  out << "strongly_biconnected: " << yes_no(is_strongly_biconnected(g)) << '\n';
  out << "2vertex_connected: " << yes_no(is_2vertex_connected(g)) << '\n';
  out << "2v_strongly_biconnected: " << yes_no(is_2v_strongly_biconnected(g)) << '\n';
  if (g.n() >= 3 && is_strongly_connected(g)) {
    out << "strong_articulation_points: " << vertex_set(strong_articulation_points_fast(g)) << '\n';
  } else {
    out << "strong_articulation_points: n/a (needs a strongly connected graph with n >= 3)\n";
  }
  if (g.n() >= 2) out << "b_articulation_points: " << vertex_set(b_articulation_points(g)) << '\n';

  bool ok = true;
  if (!a.subgraph_path.empty()) {
    DiGraph sub = read_graph_file(a.subgraph_path);
    bool subset = true;
    for (const Edge& e : sub.edges()) subset = subset && g.has_edge(e);
    bool spanning = sub.n() == g.n();
    if (!subset || !spanning) {
      err << "error: subgraph is not a " << (subset ? "spanning subgraph" : "subset of the graph") << '\n';
      return 1;
    }
    bool feasible = is_2v_strongly_biconnected(sub);
    out << "subgraph m " << sub.m() << '\n';
    out << "subgraph subset: true\nsubgraph spanning: true\n";
    out << "subgraph 2v_strongly_biconnected: " << yes_no(feasible) << '\n';
    ok = feasible;
    if (a.minimal) {
      bool minimal = feasible;
      for (const Edge& e : sub.edges()) {
        if (!minimal) break;
        minimal = !is_2v_strongly_biconnected(delete_edge(sub, e));
      }
      out << "subgraph minimal: " << yes_no(minimal) << '\n';
      ok = ok && minimal;
    }
  }
  if (a.exact) {
    ExactResult r = exact_min_2vsb(g);
    out << "opt " << r.opt_size << '\n';
  }
  return ok ? 0 : 1;
}

std::vector<Algorithm> parse_algorithm_list(const std::vector<std::string>& names) {
  std::vector<Algorithm> out;
  for (const auto& name : names) {
    if (name.empty()) continue;
    auto a = parse_algorithm(name);
    if (!a) throw Error("unknown algorithm '" + name + "'");
    out.push_back(*a);
  }
  return out;
}

struct BenchArgs {
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algs{"alg1", "alg2", "alg3"};
  int repetitions = 1;
  std::string csv_path = "bench.csv";
  std::string markdown_path;
  bool quiet = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  cfg.sizes = a.sizes;
  cfg.seeds = a.seeds;
  cfg.algorithms = parse_algorithm_list(a.algs);
  cfg.repetitions = a.repetitions;
  validate(cfg);
  BenchReport report = run_bench(cfg, a.quiet ? nullptr : &err);
  std::string table = format_markdown(report);
  out << table;
  write_text(a.csv_path, format_csv(report.rows));
  if (!a.markdown_path.empty()) write_text(a.markdown_path, table);
  if (!report.all_feasible()) {
    err << "error: some outputs failed verification\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate minimum 2-vertex strongly biconnected spanning subgraphs", "tvsb"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random 2-vertex strongly biconnected graph");
  gen_cmd->add_option("--n", gen.n, "Vertex count (>= 4)")->required();
  gen_cmd->add_option("--seed", gen.seed, "splitmix64 seed");
  gen_cmd->add_option("--out", gen.out_path, "Output file (stdout when omitted)");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run approximation algorithms on a graph file");
  run_cmd->add_option("--alg", run.alg, "alg1, alg2, alg3 or all")->required();
  run_cmd->add_option("--in", run.in_path, "Input graph file")->required();
  run_cmd->add_option("--out", run.out_path, "Subgraph output file (per-algorithm suffix with --alg all)");
  run_cmd->add_flag("--csv", run.csv, "Emit CSV rows");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Report connectivity properties and verify subgraphs");
  check_cmd->add_option("--in", check.in_path, "Graph file")->required();
  check_cmd->add_option("--subgraph", check.subgraph_path, "Candidate spanning subgraph file");
  check_cmd->add_flag("--minimal", check.minimal, "Also verify single-edge minimality of the subgraph");
  check_cmd->add_flag("--exact", check.exact, "Report the exact optimum (small graphs only)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Generate instances, time the algorithms, emit table and CSV");
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->required()->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds")->required()->delimiter(',');
  bench_cmd->add_option("--algs", bench.algs, "Algorithms (subset of alg1,alg2,alg3)")->delimiter(',');
  bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per run; the minimum time is reported");
  bench_cmd->add_option("--csv", bench.csv_path, "CSV output file");
  bench_cmd->add_option("--markdown", bench.markdown_path, "Markdown table output file");
  bench_cmd->add_flag("--quiet", bench.quiet, "No progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*run_cmd) return cmd_run(run, out, err);
    if (*check_cmd) return cmd_check(check, out, err);
    if (*bench_cmd) {
      if (parse_algorithm_list(bench.algs).empty()) {
        err << "error: --algs must name at least one of alg1, alg2, alg3\n" << bench_cmd->help();
        return 2;
      }
      return cmd_bench(bench, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace tvsb::cli
