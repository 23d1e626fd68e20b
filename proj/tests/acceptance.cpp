// Acceptance suite for the rooted-spanning-tree library. Each criterion
// prints exactly one PASS/FAIL line; the exit code is the number of
// failures. Informational lines are indented.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rst/bench.hpp"
#include "rst/bfs_rst.hpp"
#include "rst/cc_forest.hpp"
#include "rst/euler_rooting.hpp"
#include "rst/graph.hpp"
#include "rst/pr_rst.hpp"
#include "rst/rooted_forest.hpp"
#include "rst/validate.hpp"

using namespace rst;
using rst::testing::forest_partition;
using rst::testing::normalize_partition;
using rst::testing::random_tree;

namespace {

// Tolerances. Every bound the suite enforces lives here.
constexpr double kSuiteBudgetSec = 10.0;  // criterion 1 wall-clock budget
constexpr std::int64_t kBfsStepSlack = 3;  // criterion 3: bfs steps - (2^k - 1)
constexpr double kCcRatioSlack = 1.2;   // criterion 3: steps(k)/k vs k=10 base
constexpr double kPrGrowthCap = 2.1;    // criterion 3: pr steps 2^14 vs 2^10
constexpr double kBfsGrowthFloor = 15.0;  // criterion 4
constexpr double kCcGrowthCap = 1.5;      // criterion 4
constexpr int kRandomTreeCount = 100;     // criteria 2 and 6
constexpr Vertex kRandomTreeMaxN = 256;

int g_failures = 0;

void report(int id, bool pass, const std::string& msg) {
  std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", id,
              msg.c_str());
  if (!pass) ++g_failures;
}

void info(const std::string& msg) { std::printf("      %s\n", msg.c_str()); }

struct Dataset {
  std::string name;
  Graph g;
};

struct SuiteRun {
  RootedForest forest;
  std::int64_t steps = 0;
  bool valid = true;
  std::int64_t tree_edges = 0;   // non-self parent entries
  std::int64_t tree_depth = 0;   // depth of the tree rooted at vertex 0
};

std::vector<Dataset> build_suite() {
  std::vector<Dataset> suite;
  auto gen = [](const char* spec, std::uint64_t seed = 0) {
    return build_csr(generate(parse_gen_spec(spec), seed));
  };
  suite.push_back({"path:10000", gen("path:10000")});
  suite.push_back({"star:10000", gen("star:10000")});
  suite.push_back({"grid:100:100", gen("grid:100:100")});
  for (std::uint64_t s = 1; s <= 5; ++s)
    suite.push_back({"random:2000:0.005 seed=" + std::to_string(s),
                     gen("random:2000:0.005", s)});
  suite.push_back({"two-triangles", rst::testing::two_triangles()});
  suite.push_back({"single-vertex", gen("path:1")});
  return suite;
}

std::string join_i64(const std::vector<std::int64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

int main() {
  std::printf("rooted spanning tree acceptance suite\n");

  // Shared phase: every algorithm on every suite graph, root 0, one worker.
  auto suite = build_suite();
  auto t0 = std::chrono::steady_clock::now();
  // runs[d][a]
  std::vector<std::vector<SuiteRun>> runs(suite.size());
  for (size_t d = 0; d < suite.size(); ++d) {
    const Graph& g = suite[d].g;
    for (AlgoKind a : kAllAlgos) {
      RunOptions opt;
      auto res = run_algorithm(g, a, opt);
      SuiteRun r;
      r.steps = res.report.steps;
      r.valid = validate_rooted_forest(g, res.forest, 0).valid;
      for (Vertex v = 0; v < g.n; ++v)
        if (res.forest.parent[static_cast<size_t>(v)] != v) ++r.tree_edges;
      if (r.valid) {
        auto depth = forest_depth(res.forest);
        for (auto& [root, dep] : depth.per_root)
          if (root == 0) r.tree_depth = dep;
      }
      r.forest = std::move(res.forest);
      runs[d].push_back(std::move(r));
    }
  }
  double suite_sec = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();

  // Criterion 1: every algorithm yields a valid rooted spanning forest on
  // every suite graph, with n - #components tree edges, inside the budget.
  {
    int checked = 0, ok = 0;
    std::string first_bad;
    for (size_t d = 0; d < suite.size(); ++d) {
      const Graph& g = suite[d].g;
      auto labels = oracle_components(g);
      std::set<Vertex> comps(labels.begin(), labels.end());
      auto want_edges =
          g.n - static_cast<std::int64_t>(comps.size());
      for (size_t a = 0; a < 3; ++a) {
        ++checked;
        const SuiteRun& r = runs[d][a];
        if (r.valid && r.tree_edges == want_edges) {
          ++ok;
        } else if (first_bad.empty()) {
          first_bad = suite[d].name + "/" + algo_name(kAllAlgos[a]);
        }
      }
    }
    bool in_budget = suite_sec < kSuiteBudgetSec;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d/%d forests valid with n-c tree edges in %.2fs "
                  "(budget %.0fs)%s%s",
                  ok, checked, suite_sec, kSuiteBudgetSec,
                  first_bad.empty() ? "" : ", first failure: ",
                  first_bad.c_str());
    report(1, ok == checked && in_budget, buf);
  }

  // Criterion 2: component partitions match the oracle, and Euler rooting
  // reproduces the sequential rooting exactly on random trees.
  {
    bool parts_ok = true;
    std::string bad;
    for (size_t d = 0; d < suite.size() && parts_ok; ++d) {
      const Graph& g = suite[d].g;
      auto want = oracle_components(g);
      StepEngine e;
      auto sf = cc_spanning_forest(g, e);
      if (normalize_partition(sf.labels) != want) {
        parts_ok = false;
        bad = "cc labels on " + suite[d].name;
        break;
      }
      if (forest_partition(runs[d][2].forest.parent) != want) {
        parts_ok = false;
        bad = "pr-rst partition on " + suite[d].name;
      }
    }

    int tree_ok = 0;
    std::mt19937_64 rng(20260815);
    for (int t = 0; t < kRandomTreeCount; ++t) {
      Vertex n = 1 + static_cast<Vertex>(
                         rng() % static_cast<uint64_t>(kRandomTreeMaxN));
      auto te = random_tree(n, rng);
      Vertex root =
          static_cast<Vertex>(rng() % static_cast<uint64_t>(n));
      auto labels =
          oracle_components(rst::testing::graph_from_edges(n, te));
      StepEngine e;
      auto f = euler_root_forest(n, te, labels, root, e);
      if (f.parent == oracle_root_tree(n, te, root)) ++tree_ok;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "partitions match oracle on %zu graphs%s%s; euler rooting "
                  "exact on %d/%d random trees",
                  suite.size(), bad.empty() ? "" : " except ", bad.c_str(),
                  tree_ok, kRandomTreeCount);
    report(2, parts_ok && tree_ok == kRandomTreeCount, buf);
  }

  // Step counts on path(2^k), k = 10..14, shared by criteria 3 and 4.
  std::vector<std::int64_t> bfs_steps, cc_steps, pr_steps;
  for (int k = 10; k <= 14; ++k) {
    auto g = build_csr(gen_path(std::int64_t{1} << k));
    StepEngine eb, ec, ep;
    bfs_rst(g, 0, eb);
    cc_euler_rst(g, 0, ec);
    pr_rst(g, 0, ep);
    bfs_steps.push_back(eb.steps());
    cc_steps.push_back(ec.steps());
    pr_steps.push_back(ep.steps());
  }

  // Criterion 3: bfs pays one step per level; the other two stay
  // logarithmic, measured against their k=10 baseline.
  {
    bool bfs_ok = true, cc_ok = true, pr_ok = true;
    for (int i = 0; i < 5; ++i) {
      std::int64_t k = 10 + i;
      std::int64_t lower = (std::int64_t{1} << k) - 1;
      if (bfs_steps[static_cast<size_t>(i)] < lower ||
          bfs_steps[static_cast<size_t>(i)] > lower + kBfsStepSlack)
        bfs_ok = false;
      double ratio =
          static_cast<double>(cc_steps[static_cast<size_t>(i)]) /
          static_cast<double>(k);
      double base = static_cast<double>(cc_steps[0]) / 10.0;
      if (ratio > base * kCcRatioSlack) cc_ok = false;
    }
    double pr_growth = static_cast<double>(pr_steps[4]) /
                       static_cast<double>(pr_steps[0]);
    if (pr_growth > kPrGrowthCap) pr_ok = false;

    info("bfs steps      " + join_i64(bfs_steps));
    info("cc-euler steps " + join_i64(cc_steps));
    info("pr-rst steps   " + join_i64(pr_steps));
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "path(2^k) k=10..14: bfs within [2^k-1, 2^k-1+%" PRId64
                  "] (%s), cc-euler steps/k within %.0f%% of k=10 base (%s), "
                  "pr-rst growth %.2f <= %.2f (%s)",
                  kBfsStepSlack, bfs_ok ? "ok" : "violated",
                  (kCcRatioSlack - 1.0) * 100.0, cc_ok ? "ok" : "violated",
                  pr_growth, kPrGrowthCap, pr_ok ? "ok" : "violated");
    report(3, bfs_ok && cc_ok && pr_ok, buf);
  }

  // Criterion 4: growth from k=10 to k=14 separates linear from logarithmic.
  {
    double bfs_growth = static_cast<double>(bfs_steps[4]) /
                        static_cast<double>(bfs_steps[0]);
    double cc_growth = static_cast<double>(cc_steps[4]) /
                       static_cast<double>(cc_steps[0]);
    bool ok = bfs_growth >= kBfsGrowthFloor && cc_growth <= kCcGrowthCap;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "bfs grows %.2fx (floor %.0fx), cc-euler grows %.2fx "
                  "(cap %.1fx)",
                  bfs_growth, kBfsGrowthFloor, cc_growth, kCcGrowthCap);
    report(4, ok, buf);
  }

  // Criterion 5: tree depths side by side; the bfs tree must be exactly as
  // shallow as the root's eccentricity allows.
  {
    bool ok = true;
    info("tree depth from vertex 0   bfs  cc-euler    pr-rst");
    for (size_t d = 0; d < suite.size(); ++d) {
      char row[160];
      std::snprintf(row, sizeof row, "%-24s %5lld %9lld %9lld",
                    suite[d].name.c_str(),
                    static_cast<long long>(runs[d][0].tree_depth),
                    static_cast<long long>(runs[d][1].tree_depth),
                    static_cast<long long>(runs[d][2].tree_depth));
      info(row);
      auto levels = oracle_bfs_levels(suite[d].g, 0);
      std::int64_t ecc = 0;
      for (auto l : levels)
        if (l != kNone) ecc = std::max(ecc, l);
      if (runs[d][0].tree_depth != ecc) ok = false;
    }
    report(5, ok,
           ok ? "bfs depth equals the root's eccentricity on every graph"
              : "bfs depth deviates from the root's eccentricity");
  }

  // Criterion 6: the arc successor closes one full cycle per tree, and
  // ranks are a bijection after the cut.
  {
    int cycle_ok = 0, rank_ok = 0;
    std::mt19937_64 rng(424242);
    for (int t = 0; t < kRandomTreeCount; ++t) {
      Vertex n = 2 + static_cast<Vertex>(
                         rng() % static_cast<uint64_t>(kRandomTreeMaxN - 1));
      auto te = random_tree(n, rng);
      StepEngine e;
      auto es = build_euler(n, te, e);
      compute_successor(es, e);

      std::vector<char> seen(static_cast<size_t>(es.num_arcs), 0);
      EdgeId cur = 0;
      std::int64_t len = 0;
      bool closed = true;
      do {
        if (cur < 0 || seen[static_cast<size_t>(cur)]) {
          closed = false;
          break;
        }
        seen[static_cast<size_t>(cur)] = 1;
        cur = es.succ[static_cast<size_t>(cur)];
        ++len;
      } while (cur != 0);
      if (closed && len == 2 * (n - 1)) ++cycle_ok;

      std::vector<Vertex> roots = {0};
      break_cycles(es, roots, e);
      auto rank = list_rank(es, e);
      std::sort(rank.begin(), rank.end());
      std::vector<std::int64_t> want(static_cast<size_t>(es.num_arcs));
      std::iota(want.begin(), want.end(), 0);
      if (rank == want) ++rank_ok;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "successor cycle covers all 2(n-1) arcs on %d/%d trees, "
                  "ranks form a bijection on %d/%d",
                  cycle_ok, kRandomTreeCount, rank_ok, kRandomTreeCount);
    report(6, cycle_ok == kRandomTreeCount && rank_ok == kRandomTreeCount,
           buf);
  }

  // Criterion 7: reruns and worker counts change nothing observable.
  {
    bool ok = true;
    std::string bad;
    std::vector<Dataset> dets;
    dets.push_back({"path:4096", build_csr(gen_path(4096))});
    dets.push_back({"grid:50:50", build_csr(gen_grid(50, 50))});
    dets.push_back({"random:1000:0.01 seed=3",
                    build_csr(gen_random(1000, 0.01, 3))});
    dets.push_back({"two-triangles", rst::testing::two_triangles()});
    for (auto& dsa : dets) {
      for (AlgoKind a : kAllAlgos) {
        RunOptions one;
        RunOptions many;
        many.workers = 8;
        auto r1 = run_algorithm(dsa.g, a, one);
        auto r2 = run_algorithm(dsa.g, a, one);
        auto r8 = run_algorithm(dsa.g, a, many);
        bool same = r1.forest.parent == r2.forest.parent &&
                    r1.forest.parent == r8.forest.parent &&
                    r1.report.steps == r2.report.steps &&
                    r1.report.steps == r8.report.steps &&
                    r1.report.work == r8.report.work;
        if (!same && ok) {
          ok = false;
          bad = dsa.name + "/" + algo_name(a);
        }
      }
    }
    report(7, ok,
           ok ? "12 graph/algorithm pairs bit-identical across reruns and "
                "1 vs 8 workers"
              : "nondeterminism on " + bad);
  }

  // Criterion 8: the bench harness performs 1 warm-up + 5 timed runs and
  // reports the median of the timed five.
  {
    auto g = build_csr(gen_path(2048));
    RunOptions opt;
    BenchProbe probe;
    auto rec = bench_row(g, "gen:path:2048", AlgoKind::kBfs, opt, &probe);
    auto sorted = probe.timed_ms;
    std::sort(sorted.begin(), sorted.end());
    bool ok = probe.executions == 6 && probe.timed_ms.size() == 5 &&
              sorted.size() == 5 && rec.median_ms == sorted[2];
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%lld executions (want 6), %zu timed, median %.4fms == "
                  "sorted middle (%s)",
                  static_cast<long long>(probe.executions),
                  probe.timed_ms.size(), rec.median_ms,
                  ok ? "yes" : "no");
    report(8, ok, buf);
  }

  // Criterion 9: jump batching changes barrier counts, never the forest.
  {
    auto g = build_csr(gen_path(4096));
    StepEngine e1, e5;
    auto f1 = pr_rst(g, 0, e1, 1);
    auto f5 = pr_rst(g, 0, e5, 5);
    bool ok = f1.parent == f5.parent && e5.steps() <= e1.steps();
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "path:4096 parents identical across batch 1 and 5 (%s), "
                  "steps %lld (batch 5) <= %lld (batch 1)",
                  f1.parent == f5.parent ? "yes" : "no",
                  static_cast<long long>(e5.steps()),
                  static_cast<long long>(e1.steps()));
    report(9, ok, buf);
  }

  if (g_failures == 0)
    std::printf("all 9 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures;
}
