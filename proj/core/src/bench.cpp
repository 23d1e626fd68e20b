#include "rst/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "rst/bfs_rst.hpp"
#include "rst/euler_rooting.hpp"
#include "rst/pr_rst.hpp"
#include "rst/validate.hpp"

namespace rst {

const char* algo_name(AlgoKind algo) {
  switch (algo) {
    case AlgoKind::kBfs:
      return "bfs";
    case AlgoKind::kCcEuler:
      return "cc-euler";
    case AlgoKind::kPrRst:
      return "pr-rst";
  }
  return "?";
}

std::optional<AlgoKind> parse_algo(const std::string& name) {
  if (name == "bfs") return AlgoKind::kBfs;
  if (name == "cc-euler") return AlgoKind::kCcEuler;
  if (name == "pr-rst") return AlgoKind::kPrRst;
  return std::nullopt;
}

RunResult run_algorithm(const Graph& g, AlgoKind algo, const RunOptions& opt) {
  StepEngine engine(opt.workers);
  RunResult res;
  switch (algo) {
    case AlgoKind::kBfs:
      res.forest = bfs_rst(g, opt.root, engine);
      break;
    case AlgoKind::kCcEuler:
      res.forest = cc_euler_rst(g, opt.root, engine);
      break;
    case AlgoKind::kPrRst:
      res.forest = pr_rst(g, opt.root, engine, opt.jump_batch);
      break;
  }
  res.report = engine.report();
  return res;
}

BenchRecord bench_row(const Graph& g, const std::string& dataset,
                      AlgoKind algo, const RunOptions& opt,
                      BenchProbe* probe) {
  using clock = std::chrono::steady_clock;
  BenchRecord rec;
  rec.dataset = dataset;
  rec.algorithm = algo_name(algo);
  rec.n = g.n;
  rec.m = g.m;
  rec.root = opt.root;

  run_algorithm(g, algo, opt);  // warm-up, untimed
  if (probe) ++probe->executions;

  std::vector<double> times;
  RunResult last;
  for (int i = 0; i < 5; ++i) {
    auto t0 = clock::now();
    last = run_algorithm(g, algo, opt);
    auto t1 = clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    times.push_back(ms);
    if (probe) {
      ++probe->executions;
      probe->timed_ms.push_back(ms);
    }
  }
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  rec.median_ms = sorted[2];
  rec.steps = last.report.steps;
  rec.work = last.report.work;
  rec.components = static_cast<std::int64_t>(last.forest.roots.size());
  rec.valid = validate_rooted_forest(g, last.forest, opt.root).valid;
  rec.tree_depth = rec.valid ? forest_depth(last.forest).max_depth : 0;
  return rec;
}

namespace {

// Quotes a field only when it would break the row structure.
void write_field(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("double format failed");
  return std::string(buf, ptr);
}

std::vector<std::string> split_row(const std::string& line,
                                   std::int64_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw std::runtime_error("unterminated quote on line " +
                             std::to_string(line_no));
  fields.push_back(std::move(cur));
  return fields;
}

std::int64_t parse_i64(const std::string& s, std::int64_t line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("bad integer field on line " +
                             std::to_string(line_no));
  return v;
}

double parse_f64(const std::string& s, std::int64_t line_no) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("bad numeric field on line " +
                             std::to_string(line_no));
  return v;
}

}  // namespace

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const BenchRecord& rec) {
  write_field(out, rec.dataset);
  out << ',' << rec.algorithm << ',' << rec.n << ',' << rec.m << ','
      << rec.root << ',' << format_double(rec.median_ms) << ',' << rec.steps
      << ',' << rec.work << ',' << rec.tree_depth << ',' << rec.components
      << ',' << (rec.valid ? "true" : "false") << '\n';
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader)
    throw std::runtime_error("unexpected CSV header: " + line);

  std::vector<BenchRecord> records;
  std::int64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f = split_row(line, line_no);
    if (f.size() != 11)
      throw std::runtime_error("expected 11 fields on line " +
                               std::to_string(line_no) + ", got " +
                               std::to_string(f.size()));
    BenchRecord rec;
    rec.dataset = f[0];
    rec.algorithm = f[1];
    rec.n = parse_i64(f[2], line_no);
    rec.m = parse_i64(f[3], line_no);
    rec.root = parse_i64(f[4], line_no);
    rec.median_ms = parse_f64(f[5], line_no);
    rec.steps = parse_i64(f[6], line_no);
    rec.work = parse_i64(f[7], line_no);
    rec.tree_depth = parse_i64(f[8], line_no);
    rec.components = parse_i64(f[9], line_no);
    if (f[10] == "true") {
      rec.valid = true;
    } else if (f[10] == "false") {
      rec.valid = false;
    } else {
      throw std::runtime_error("bad valid flag on line " +
                               std::to_string(line_no));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

EdgeList load_source(const std::string& source, std::uint64_t seed) {
  if (source.rfind("gen:", 0) == 0) {
    return generate(parse_gen_spec(source), seed);
  }
  std::ifstream in(source);
  if (!in) throw std::runtime_error("file not found: " + source);
  return load_edge_list(in);
}

}  // namespace rst
