#include "tvsb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "tvsb/connectivity.hpp"
#include "tvsb/generator.hpp"

namespace tvsb {

bool BenchReport::all_feasible() const {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.feasible; });
}

void validate(const BenchConfig& cfg) {
  if (cfg.sizes.empty()) throw Error("no sizes given");
  if (cfg.seeds.empty()) throw Error("no seeds given");
  if (cfg.algorithms.empty()) throw Error("no algorithms given");
  if (cfg.repetitions < 1) throw Error("repetitions must be >= 1");
  for (int n : cfg.sizes)
    if (n < 4) throw Error("n must be >= 4");
}

bool verify_output(const DiGraph& g, const DiGraph& sub) {
  if (sub.n() != g.n()) return false;
  for (const Edge& e : sub.edges())
    if (!g.has_edge(e)) return false;
  return is_2v_strongly_biconnected(sub);
}

BenchReport run_bench(const BenchConfig& cfg, std::ostream* log) {
  validate(cfg);
  BenchReport report;
  for (int n : cfg.sizes) {
    for (std::uint64_t seed : cfg.seeds) {
      DiGraph g = generate({n, seed});
      if (log) *log << "instance n=" << n << " seed=" << seed << " m=" << g.m() << '\n';
      for (Algorithm a : cfg.algorithms) {
        BenchRow row;
        row.n = g.n();
        row.m = g.m();
        row.seed = seed;
        row.algorithm = a;
        std::chrono::nanoseconds best = std::chrono::nanoseconds::max();
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
          const auto start = std::chrono::steady_clock::now();
          AlgoResult result = run_algorithm(a, g, cfg.options);
          best = std::min(best, std::chrono::steady_clock::now() - start);
          row.subgraph = std::move(result.subgraph);
        }
        row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(best).count();
        row.edges_out = row.subgraph.m();
        row.feasible = verify_output(g, row.subgraph);
        if (log) {
          *log << "  " << to_string(a) << ": " << row.edges_out << " edges, " << format_duration_ms(row.elapsed_ms)
               << (row.feasible ? "" : ", INFEASIBLE") << '\n';
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

std::string csv_row(const BenchRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.m << ',' << to_string(row.algorithm) << ',' << row.elapsed_ms << ',' << row.edges_out
      << ',' << (row.feasible ? "true" : "false");
  return out.str();
}

std::string format_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kCsvHeader) + '\n';
  for (const BenchRow& r : rows) out += csv_row(r) + '\n';
  return out;
}

std::string format_duration_ms(long long ms) {
  char buf[64];
  if (ms < 1000) {
    std::snprintf(buf, sizeof buf, "%lld ms", ms);
  } else if (ms < 60'000) {
    std::snprintf(buf, sizeof buf, "%.2f s", static_cast<double>(ms) / 1000.0);
  } else {
    std::snprintf(buf, sizeof buf, "%lld m %lld s", ms / 60'000, (ms % 60'000) / 1000);
  }
  return buf;
}

std::string format_markdown(const BenchReport& report) {
  static constexpr Algorithm kColumnOrder[] = {Algorithm::alg2, Algorithm::alg3, Algorithm::alg1};
  static constexpr const char* kColumnName[] = {"Algorithm2", "Algorithm3", "Algorithm1"};

  std::vector<int> columns;
  for (int c = 0; c < 3; ++c) {
    bool present = std::any_of(report.rows.begin(), report.rows.end(),
                               [&](const BenchRow& r) { return r.algorithm == kColumnOrder[c]; });
    if (present) columns.push_back(c);
  }

  std::ostringstream out;
  out << "| Input (V,E) |";
  for (int c : columns) out << ' ' << kColumnName[c] << " Time | " << kColumnName[c] << " Edges |";
  out << "\n|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) out << "---|---|";
  out << '\n';

  // Instances in first-appearance order.
  std::vector<std::pair<int, std::uint64_t>> instances;
  std::map<std::pair<int, std::uint64_t>, std::vector<const BenchRow*>> by_instance;
  for (const BenchRow& r : report.rows) {
    auto key = std::make_pair(r.n, r.seed);
    if (!by_instance.count(key)) instances.push_back(key);
    by_instance[key].push_back(&r);
  }
  for (const auto& key : instances) {
    const auto& rows = by_instance[key];
    out << "| (" << rows.front()->n << ", " << rows.front()->m << ") |";
    for (int c : columns) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const BenchRow* r) { return r->algorithm == kColumnOrder[c]; });
      if (it == rows.end()) {
        out << " - | - |";
        continue;
      }
      out << ' ' << format_duration_ms((*it)->elapsed_ms) << " | " << (*it)->edges_out
          << ((*it)->feasible ? "" : " (infeasible)") << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tvsb
