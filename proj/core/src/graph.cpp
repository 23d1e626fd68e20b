#include "rst/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <unordered_map>

namespace rst {

namespace {

// Algorithms pack (vertex, edge-id) pairs into 64-bit combine keys, so ids
// must stay below these bounds.
constexpr std::int64_t kMaxVertices = std::int64_t{1} << 31;
constexpr std::int64_t kMaxEdges = std::int64_t{1} << 32;

bool parse_int(std::string_view tok, std::int64_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n || v < 0 || v >= n) return false;
  auto nb = neighbors_of(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

ParseError::ParseError(std::int64_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

void normalize(EdgeList& el) {
  auto& e = el.edges;
  std::erase_if(e, [](const Edge& x) { return x.u == x.v; });
  for (auto& x : e)
    if (x.u > x.v) std::swap(x.u, x.v);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
}

EdgeList load_edge_list(std::istream& in) {
  std::vector<Edge> raw;
  std::string line;
  std::int64_t lineno = 0;
  bool saw_mm_header = false;
  bool first_data_line = true;

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    // strip trailing CR from DOS-style files
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
    size_t pos = sv.find_first_not_of(" \t");
    if (pos == std::string_view::npos) continue;
    if (sv[pos] == '#' || sv[pos] == '%') {
      if (sv.substr(pos).starts_with("%%")) saw_mm_header = true;
      continue;
    }

    std::int64_t vals[3];
    int ntok = 0;
    std::string_view rest = sv.substr(pos);
    while (!rest.empty()) {
      size_t b = rest.find_first_not_of(" \t");
      if (b == std::string_view::npos) break;
      size_t e = rest.find_first_of(" \t", b);
      std::string_view tok = rest.substr(b, e == std::string_view::npos ? e : e - b);
      if (ntok < 3) {
        if (!parse_int(tok, vals[ntok]))
          throw ParseError(lineno, "expected integer, got '" + std::string(tok) + "'");
      }
      ++ntok;
      if (e == std::string_view::npos) break;
      rest = rest.substr(e);
    }

    if (first_data_line && saw_mm_header && ntok == 3) {
      // MatrixMarket size header "rows cols nnz"
      first_data_line = false;
      continue;
    }
    first_data_line = false;
    if (ntok != 2)
      throw ParseError(lineno, "expected 2 integer tokens, got " + std::to_string(ntok));
    if (vals[0] < 0 || vals[1] < 0)
      throw ParseError(lineno, "negative vertex id");
    raw.push_back({vals[0], vals[1]});
  }

  if (raw.empty()) throw std::runtime_error("empty edge-list input: no data lines");

  // Collect the distinct ids; remap densely when the id set is sparse.
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& e : raw) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  EdgeList el;
  std::int64_t max_id = ids.back();
  if (static_cast<std::int64_t>(ids.size()) == max_id + 1) {
    el.num_vertices = max_id + 1;
    el.edges = std::move(raw);
  } else {
    std::unordered_map<std::int64_t, Vertex> remap;
    remap.reserve(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<Vertex>(i);
    el.num_vertices = static_cast<Vertex>(ids.size());
    el.edges.reserve(raw.size());
    for (const auto& e : raw) el.edges.push_back({remap[e.u], remap[e.v]});
    el.original_ids = std::move(ids);
  }
  if (el.num_vertices > kMaxVertices)
    throw std::runtime_error("graph too large: vertex ids exceed 2^31");
  normalize(el);
  return el;
}

void write_edge_list(std::ostream& out, const EdgeList& el) {
  for (const auto& e : el.edges) out << e.u << ' ' << e.v << '\n';
}

Graph build_csr(const EdgeList& el) {
  const Vertex n = el.num_vertices;
  const std::int64_t m = static_cast<std::int64_t>(el.edges.size());
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (m > kMaxEdges) throw std::invalid_argument("too many edges");

  Graph g;
  g.n = n;
  g.m = m;
  g.edges = el.edges;
  g.offsets.assign(n + 1, 0);

  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop in normalized EdgeList");
    ++g.offsets[e.u + 1];
    ++g.offsets[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];

  if (!std::is_sorted(g.edges.begin(), g.edges.end()) ||
      std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw std::invalid_argument("EdgeList not normalized");

  g.neighbors.assign(2 * m, 0);
  g.edge_origin.assign(2 * m, 0);
  std::vector<std::int64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  // Appending in sorted edge order leaves each vertex's range ascending:
  // back-arcs to smaller neighbors land first (ascending by first key),
  // forward arcs to larger neighbors follow (ascending by second key).
  for (EdgeId i = 0; i < m; ++i) {
    const auto [u, v] = g.edges[i];
    g.neighbors[cursor[u]] = v;
    g.edge_origin[cursor[u]++] = i;
    g.neighbors[cursor[v]] = u;
    g.edge_origin[cursor[v]++] = i;
  }
  return g;
}

EdgeList to_edge_list(const Graph& g) {
  EdgeList el;
  el.num_vertices = g.n;
  el.edges = g.edges;
  return el;
}

EdgeList gen_path(Vertex n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  EdgeList el;
  el.num_vertices = n;
  el.edges.reserve(n > 0 ? n - 1 : 0);
  for (Vertex i = 0; i + 1 < n; ++i) el.edges.push_back({i, i + 1});
  return el;
}

EdgeList gen_star(Vertex n) {
  if (n < 1) throw std::invalid_argument("star: n must be >= 1");
  EdgeList el;
  el.num_vertices = n;
  for (Vertex i = 1; i < n; ++i) el.edges.push_back({0, i});
  return el;
}

EdgeList gen_grid(Vertex rows, Vertex cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid: dimensions must be >= 1");
  EdgeList el;
  el.num_vertices = rows * cols;
  auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
  for (Vertex r = 0; r < rows; ++r)
    for (Vertex c = 0; c < cols; ++c) {
      if (c + 1 < cols) el.edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) el.edges.push_back({id(r, c), id(r + 1, c)});
    }
  normalize(el);
  return el;
}

EdgeList gen_random(Vertex n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random: p must be in [0,1]");
  // Fixed-threshold draw on the raw 64-bit stream keeps the edge set
  // identical across standard-library implementations.
  std::mt19937_64 rng(seed);
  bool always = p >= 1.0;
  std::uint64_t threshold = 0;
  if (!always && p > 0.0) {
    const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
    if (scaled >= 18446744073709551616.0L)
      always = true;
    else
      threshold = static_cast<std::uint64_t>(scaled);
  }
  EdgeList el;
  el.num_vertices = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t r = rng();
      if (always || r < threshold) el.edges.push_back({u, v});
    }
  return el;
}

EdgeList gen_complete(Vertex n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  EdgeList el;
  el.num_vertices = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) el.edges.push_back({u, v});
  return el;
}

GenSpec parse_gen_spec(const std::string& spec) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon == std::string::npos ? colon : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  size_t k = 0;
  if (!parts.empty() && parts[0] == "gen") ++k;
  if (parts.size() <= k) throw std::invalid_argument("empty generator spec: " + spec);

  auto want = [&](size_t count) {
    if (parts.size() - k - 1 != count)
      throw std::invalid_argument("generator spec '" + spec + "': wrong number of parameters");
  };
  auto num = [&](size_t i) -> std::int64_t {
    std::int64_t v;
    if (!parse_int(parts[k + 1 + i], v))
      throw std::invalid_argument("generator spec '" + spec + "': bad integer");
    return v;
  };

  GenSpec out;
  const std::string& kind = parts[k];
  if (kind == "path") {
    out.kind = GenSpec::Kind::path;
    want(1);
    out.n = num(0);
  } else if (kind == "star") {
    out.kind = GenSpec::Kind::star;
    want(1);
    out.n = num(0);
  } else if (kind == "grid") {
    out.kind = GenSpec::Kind::grid;
    want(2);
    out.rows = num(0);
    out.cols = num(1);
  } else if (kind == "random") {
    out.kind = GenSpec::Kind::random;
    want(2);
    out.n = num(0);
    try {
      out.p = std::stod(parts[k + 2]);
    } catch (const std::exception&) {
      throw std::invalid_argument("generator spec '" + spec + "': bad probability");
    }
  } else if (kind == "complete") {
    out.kind = GenSpec::Kind::complete;
    want(1);
    out.n = num(0);
  } else {
    throw std::invalid_argument("unknown generator kind: " + kind);
  }
  return out;
}

EdgeList generate(const GenSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case GenSpec::Kind::path: return gen_path(spec.n);
    case GenSpec::Kind::star: return gen_star(spec.n);
    case GenSpec::Kind::grid: return gen_grid(spec.rows, spec.cols);
    case GenSpec::Kind::random: return gen_random(spec.n, spec.p, seed);
    case GenSpec::Kind::complete: return gen_complete(spec.n);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace rst
