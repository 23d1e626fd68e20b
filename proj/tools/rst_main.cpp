#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rst/bench.hpp"
#include "rst/bfs_rst.hpp"
#include "rst/graph.hpp"
#include "rst/rooted_forest.hpp"
#include "rst/validate.hpp"

namespace {

struct CommonOpts {
  std::int64_t root = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::int64_t jump_batch = 5;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--root", o.root, "Root vertex id (default 0)");
  cmd->add_option("--seed", o.seed, "Seed for generator sources");
  cmd->add_option("--workers", o.workers, "Worker threads for the step engine")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--jump-batch", o.jump_batch,
                  "Pointer jumps per barrier in pr-rst")
      ->check(CLI::Range(1, 20));
}

rst::Graph load_graph(const std::string& source, std::uint64_t seed) {
  return rst::build_csr(rst::load_source(source, seed));
}

rst::RunOptions to_run_options(const CommonOpts& o) {
  rst::RunOptions opt;
  opt.root = o.root;
  opt.workers = o.workers;
  opt.jump_batch = o.jump_batch;
  return opt;
}

int cmd_run(const std::string& source, const std::string& algo_name,
            const CommonOpts& common, const std::string& dump_path,
            bool as_json) {
  auto algo = rst::parse_algo(algo_name);
  if (!algo) {
    std::cerr << "unknown algorithm: " << algo_name << "\n";
    return 2;
  }
  rst::Graph g = load_graph(source, common.seed);
  rst::RunResult res = rst::run_algorithm(g, *algo, to_run_options(common));
  rst::ValidationReport report =
      rst::validate_rooted_forest(g, res.forest, common.root);
  rst::DepthStats depth = rst::forest_depth(res.forest);

  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      std::cerr << "cannot write " << dump_path << "\n";
      return 1;
    }
    rst::write_parent_array(out, res.forest.parent);
  }

  if (as_json) {
    nlohmann::json j;
    j["source"] = source;
    j["algorithm"] = algo_name;
    j["n"] = g.n;
    j["m"] = g.m;
    j["root"] = common.root;
    j["steps"] = res.report.steps;
    j["work"] = res.report.work;
    j["wall_ms"] = res.report.wall_ms;
    j["tree_depth"] = depth.max_depth;
    j["components"] = static_cast<std::int64_t>(res.forest.roots.size());
    j["valid"] = report.valid;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "source      " << source << "\n"
              << "algorithm   " << algo_name << "\n"
              << "n           " << g.n << "\n"
              << "m           " << g.m << "\n"
              << "root        " << common.root << "\n"
              << "steps       " << res.report.steps << "\n"
              << "work        " << res.report.work << "\n"
              << "wall_ms     " << res.report.wall_ms << "\n"
              << "tree_depth  " << depth.max_depth << "\n"
              << "components  " << res.forest.roots.size() << "\n"
              << "valid       " << (report.valid ? "true" : "false") << "\n";
  }
  if (!report.valid) {
    for (const std::string& e : report.errors)
      std::cerr << "validation: " << e << "\n";
    return 1;
  }
  return 0;
}

int cmd_bench(const std::vector<std::string>& sources,
              std::vector<std::string> algo_names, const CommonOpts& common,
              const std::string& out_path) {
  if (algo_names.empty()) algo_names = {"bfs", "cc-euler", "pr-rst"};
  std::vector<rst::AlgoKind> algos;
  for (const std::string& name : algo_names) {
    auto a = rst::parse_algo(name);
    if (!a) {
      std::cerr << "unknown algorithm: " << name << "\n";
      return 2;
    }
    algos.push_back(*a);
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  rst::write_csv_header(out);
  bool all_valid = true;
  for (const std::string& source : sources) {
    rst::Graph g = load_graph(source, common.seed);
    for (rst::AlgoKind algo : algos) {
      rst::BenchRecord rec =
          rst::bench_row(g, source, algo, to_run_options(common));
      write_csv_row(out, rec);
      all_valid = all_valid && rec.valid;
    }
  }
  return all_valid ? 0 : 1;
}

int cmd_stats(const std::string& source, const CommonOpts& common) {
  rst::Graph g = load_graph(source, common.seed);
  rst::StepEngine engine(common.workers);
  rst::RootedForest f = rst::bfs_rst(g, common.root, engine);
  rst::DepthStats depth = rst::forest_depth(f);
  std::int64_t root_depth = 0;
  for (const auto& [r, d] : depth.per_root) {
    if (r == common.root) root_depth = d;
  }
  std::cout << "n           " << g.n << "\n"
            << "m           " << g.m << "\n"
            << "components  " << f.roots.size() << "\n"
            << "depth       " << root_depth << "\n";
  return 0;
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params,
            const CommonOpts& common, const std::string& out_path) {
  std::string spec = kind;
  for (const std::string& p : params) spec += ":" + p;
  rst::EdgeList el = rst::generate(rst::parse_gen_spec(spec), common.seed);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
  }
  rst::write_edge_list(out_path.empty() ? std::cout : file, el);
  return 0;
}

int cmd_validate(const std::string& source, const std::string& parents_path,
                 const CommonOpts& common, bool root_given) {
  rst::Graph g = load_graph(source, common.seed);
  std::ifstream in(parents_path);
  if (!in) {
    std::cerr << "file not found: " << parents_path << "\n";
    return 1;
  }
  rst::RootedForest f = rst::forest_from_parent(rst::read_parent_array(in));
  rst::ValidationReport report = rst::validate_rooted_forest(
      g, f, root_given ? common.root : rst::kNone);
  if (report.valid) {
    std::cout << "valid rooted spanning forest (" << f.roots.size()
              << " components)\n";
    return 0;
  }
  for (const std::string& e : report.errors)
    std::cerr << "violation: " << e << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted-spanning-tree construction strategies under a "
               "step-synchronous execution model"};
  app.require_subcommand(1);

  CommonOpts common;

  auto* run = app.add_subcommand("run", "Run one algorithm and validate");
  std::string run_source;
  std::string run_algo = "bfs";
  std::string run_algo_flag;
  std::string dump_path;
  bool as_json = false;
  run->add_option("source", run_source, "Graph file or gen:<spec>")
      ->required();
  run->add_option("algorithm", run_algo, "bfs | cc-euler | pr-rst");
  run->add_option("--algo", run_algo_flag, "Algorithm (alternative to the positional)");
  run->add_option("--dump-parents", dump_path, "Write the parent array here");
  run->add_flag("--json", as_json, "Emit the summary as JSON");
  add_common(run, common);

  auto* bench = app.add_subcommand("bench", "Benchmark sources x algorithms to CSV");
  std::vector<std::string> bench_sources;
  std::vector<std::string> bench_algos;
  std::string bench_out;
  bench->add_option("sources", bench_sources, "Graph files or gen:<spec>s")
      ->required();
  bench->add_option("--algo", bench_algos, "Algorithms (default: all three)");
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  add_common(bench, common);

  auto* stats = app.add_subcommand("stats", "Graph stats and BFS-tree depth");
  std::string stats_source;
  stats->add_option("source", stats_source, "Graph file or gen:<spec>")
      ->required();
  add_common(stats, common);

  auto* gen = app.add_subcommand("gen", "Write a generated edge list");
  std::string gen_kind;
  std::vector<std::string> gen_params;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "path | star | grid | random | complete")
      ->required();
  gen->add_option("params", gen_params, "Generator parameters");
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  add_common(gen, common);

  auto* validate = app.add_subcommand("validate", "Validate a parent dump against a graph");
  std::string val_source;
  std::string val_parents;
  validate->add_option("source", val_source, "Graph file or gen:<spec>")
      ->required();
  validate->add_option("parents", val_parents, "Parent dump, one integer per line")
      ->required();
  add_common(validate, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      std::string algo = run_algo_flag.empty() ? run_algo : run_algo_flag;
      return cmd_run(run_source, algo, common, dump_path, as_json);
    }
    if (bench->parsed())
      return cmd_bench(bench_sources, bench_algos, common, bench_out);
    if (stats->parsed()) return cmd_stats(stats_source, common);
    if (gen->parsed()) return cmd_gen(gen_kind, gen_params, common, gen_out);
    if (validate->parsed())
      return cmd_validate(val_source, val_parents, common,
                          validate->count("--root") > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
