#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rst/types.hpp"

namespace rst {

// Raw undirected edge set. After normalize() (which load_edge_list and the
// generators always apply): no self-loops, no duplicate pairs, every edge
// stored with u < v, edges sorted lexicographically.
struct EdgeList {
  Vertex num_vertices = 0;
  std::vector<Edge> edges;
  // When a loaded file used sparse external ids, original_ids[i] is the
  // external id of internal vertex i. Empty means the mapping is identity.
  std::vector<std::int64_t> original_ids;
};

// Immutable undirected graph in CSR form. Each undirected edge appears as two
// directed arcs; edge_origin maps an arc back to its undirected edge index.
// Neighbor lists are sorted ascending. Construction is single-threaded; a
// built Graph is safe for concurrent readers.
struct Graph {
  Vertex n = 0;
  std::int64_t m = 0;                     // undirected edge count
  std::vector<std::int64_t> offsets;      // n+1, offsets[0]=0, offsets[n]=2m
  std::vector<Vertex> neighbors;          // 2m
  std::vector<EdgeId> edge_origin;        // 2m
  std::vector<Edge> edges;                // m, normalized undirected edges

  std::span<const Vertex> neighbors_of(Vertex u) const {
    return {neighbors.data() + offsets[u],
            neighbors.data() + offsets[u + 1]};
  }
  std::int64_t degree(Vertex u) const { return offsets[u + 1] - offsets[u]; }
  bool has_edge(Vertex u, Vertex v) const;
};

// Thrown by load_edge_list on malformed input; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::int64_t line, const std::string& what);
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

// Drops self-loops, orients each edge u < v, sorts and deduplicates.
// num_vertices is left untouched.
void normalize(EdgeList& el);

// Parses whitespace-separated "u v" lines. '#' and '%' start comment lines.
// If a "%%" comment was seen, a first data line with three tokens is treated
// as a MatrixMarket size header and skipped. Ids are densely remapped by
// sorted order when the seen id set is sparse; the remap table is kept in
// original_ids. Result is normalized.
EdgeList load_edge_list(std::istream& in);

// Writes the ingestion format: one "u v" line per edge.
void write_edge_list(std::ostream& out, const EdgeList& el);

// CSR construction. Expects a normalized EdgeList; throws std::invalid_argument
// on out-of-range ids.
Graph build_csr(const EdgeList& el);

// Inverse of build_csr, for round-trip checks.
EdgeList to_edge_list(const Graph& g);

// Generators. All throw std::invalid_argument on nonpositive dimensions.
EdgeList gen_path(Vertex n);
EdgeList gen_star(Vertex n);   // n vertices total, vertex 0 is the center
EdgeList gen_grid(Vertex rows, Vertex cols);
EdgeList gen_random(Vertex n, double p, std::uint64_t seed);
EdgeList gen_complete(Vertex n);

// Generator spec as used on the command line, e.g. "path:1024",
// "grid:100:100", "random:2000:0.005". A leading "gen:" is accepted.
struct GenSpec {
  enum class Kind { path, star, grid, random, complete };
  Kind kind = Kind::path;
  Vertex n = 0;
  Vertex rows = 0, cols = 0;
  double p = 0.0;
};

GenSpec parse_gen_spec(const std::string& spec);
EdgeList generate(const GenSpec& spec, std::uint64_t seed = 0);

}  // namespace rst
