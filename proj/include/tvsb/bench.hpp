#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tvsb/approx.hpp"
#include "tvsb/graph.hpp"

namespace tvsb {

struct BenchRow {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::alg1;
  /// Minimum over repetitions.
  long long elapsed_ms = 0;
  int edges_out = 0;
  /// Output re-verified as a spanning 2-vertex strongly biconnected subgraph.
  bool feasible = false;
  DiGraph subgraph;
};

struct BenchConfig {
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<Algorithm> algorithms;
  int repetitions = 1;
  ApproxOptions options;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  bool all_feasible() const;
};

/// Throws Error for an empty size, seed or algorithm list or repetitions < 1.
void validate(const BenchConfig& cfg);

/// For every (n, seed): generate, run each algorithm `repetitions` times
/// timing only the algorithm call, then verify the output. Progress lines go
/// to `log` when given.
BenchReport run_bench(const BenchConfig& cfg, std::ostream* log = nullptr);

/// true iff sub uses only edges of g, spans g, and is 2-vertex strongly
/// biconnected.
bool verify_output(const DiGraph& g, const DiGraph& sub);

inline constexpr const char* kCsvHeader = "n,m,alg,elapsed_ms,edges_out,feasible";

std::string csv_row(const BenchRow& row);
/// Header plus one line per row.
std::string format_csv(const std::vector<BenchRow>& rows);

/// Table with one line per (n, seed) instance: Input (V,E), then Time and
/// Edges per algorithm in the order alg2, alg3, alg1.
std::string format_markdown(const BenchReport& report);

/// "850 ms", "12.34 s", "2 m 5 s".
std::string format_duration_ms(long long ms);

}  // namespace tvsb
