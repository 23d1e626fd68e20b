// Microbenchmarks for the three construction strategies on the generator
// families. Wall time here is informational; step counts are the portable
// comparison and are exported as counters.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "rst/bench.hpp"
#include "rst/graph.hpp"

namespace {

rst::Graph make_graph(const std::string& spec, std::uint64_t seed = 1) {
  return rst::build_csr(rst::generate(rst::parse_gen_spec(spec), seed));
}

void run_case(benchmark::State& state, const std::string& spec,
              rst::AlgoKind algo) {
  rst::Graph g = make_graph(spec);
  rst::RunOptions opt;
  std::int64_t steps = 0;
  for (auto _ : state) {
    rst::RunResult res = rst::run_algorithm(g, algo, opt);
    steps = res.report.steps;
    benchmark::DoNotOptimize(res.forest.parent.data());
  }
  state.counters["steps"] = static_cast<double>(steps);
  state.counters["n"] = static_cast<double>(g.n);
}

void BM_Path(benchmark::State& state) {
  auto algo = static_cast<rst::AlgoKind>(state.range(0));
  std::int64_t n = state.range(1);
  run_case(state, "path:" + std::to_string(n), algo);
}

void BM_Grid(benchmark::State& state) {
  auto algo = static_cast<rst::AlgoKind>(state.range(0));
  std::int64_t side = state.range(1);
  run_case(state, "grid:" + std::to_string(side) + ":" + std::to_string(side),
           algo);
}

void BM_Random(benchmark::State& state) {
  auto algo = static_cast<rst::AlgoKind>(state.range(0));
  std::int64_t n = state.range(1);
  run_case(state, "random:" + std::to_string(n) + ":0.005", algo);
}

void AlgoAndSize(benchmark::internal::Benchmark* b) {
  for (int algo = 0; algo < 3; ++algo) {
    for (std::int64_t n : {1 << 10, 1 << 12, 1 << 14}) b->Args({algo, n});
  }
}

void AlgoAndSide(benchmark::internal::Benchmark* b) {
  for (int algo = 0; algo < 3; ++algo) {
    for (std::int64_t side : {32, 100}) b->Args({algo, side});
  }
}

BENCHMARK(BM_Path)->Apply(AlgoAndSize)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Grid)->Apply(AlgoAndSide)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Random)->Apply(AlgoAndSize)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
