#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rst/graph.hpp"
#include "rst/rooted_forest.hpp"
#include "rst/step_engine.hpp"
#include "rst/types.hpp"

namespace rst {

enum class AlgoKind { kBfs, kCcEuler, kPrRst };

// Canonical names: "bfs", "cc-euler", "pr-rst".
const char* algo_name(AlgoKind algo);
std::optional<AlgoKind> parse_algo(const std::string& name);
inline constexpr AlgoKind kAllAlgos[] = {AlgoKind::kBfs, AlgoKind::kCcEuler,
                                         AlgoKind::kPrRst};

struct RunOptions {
  Vertex root = 0;
  int workers = 1;
  std::int64_t jump_batch = 5;
};

struct RunResult {
  RootedForest forest;
  StepReport report;
};

// Executes one algorithm on a fresh engine.
RunResult run_algorithm(const Graph& g, AlgoKind algo, const RunOptions& opt);

// One CSV row of benchmark output.
struct BenchRecord {
  std::string dataset;
  std::string algorithm;
  std::int64_t n = 0;
  std::int64_t m = 0;
  Vertex root = 0;
  double median_ms = 0.0;
  std::int64_t steps = 0;
  std::int64_t work = 0;
  std::int64_t tree_depth = 0;
  std::int64_t components = 0;
  bool valid = false;
};

// Test hook: filled by bench_row with every execution it performed.
struct BenchProbe {
  std::int64_t executions = 0;
  std::vector<double> timed_ms;  // the runs entering the median, in order
};

// Measures one (dataset, algorithm) pair: one warm-up run, then five timed
// runs, reporting the median of the five. The output forest is validated;
// a failed validation keeps the measurements but sets valid=false.
BenchRecord bench_row(const Graph& g, const std::string& dataset,
                      AlgoKind algo, const RunOptions& opt,
                      BenchProbe* probe = nullptr);

inline constexpr const char* kCsvHeader =
    "dataset,algorithm,n,m,root,median_ms,steps,work,tree_depth,components,"
    "valid";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRecord& rec);

// Parses what write_csv_* produced; numeric fields round-trip exactly.
// Throws std::runtime_error on a malformed header or row.
std::vector<BenchRecord> parse_csv(std::istream& in);

// Loads a graph source: "gen:<spec>" runs a generator with `seed`,
// anything else is a file path. Throws std::runtime_error with a
// "file not found" message for missing files.
EdgeList load_source(const std::string& source, std::uint64_t seed);

}  // namespace rst
