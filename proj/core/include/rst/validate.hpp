#pragma once

#include <string>
#include <vector>

#include "rst/graph.hpp"
#include "rst/rooted_forest.hpp"
#include "rst/types.hpp"

namespace rst {

// Sequential reference implementations. These stay deliberately simple:
// every parallel algorithm in the library is checked against them.

// Connected-component labels; label of a component is its smallest vertex id.
std::vector<Vertex> oracle_components(const Graph& g);

// Roots an acyclic, connected edge set at `root` by sequential DFS. The input
// edges must form a tree over the vertices they touch plus `root`. Throws if
// the edges contain a cycle or do not reach every vertex in [0, n).
std::vector<Vertex> oracle_root_tree(std::int64_t n,
                                     const std::vector<Edge>& tree_edges,
                                     Vertex root);

// Hop distances from `root`; kNone for unreachable vertices.
std::vector<std::int64_t> oracle_bfs_levels(const Graph& g, Vertex root);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> errors;  // empty when valid

  void fail(std::string msg) {
    valid = false;
    if (errors.size() < 32) errors.push_back(std::move(msg));
  }
};

// Checks that `f` is a rooted spanning forest of `g`:
//  - parent array has size g.n and every self-parent is listed in f.roots
//    (and vice versa),
//  - every non-self parent edge exists in g,
//  - parent chains are acyclic,
//  - each connected component of g contains exactly one root, and every
//    vertex's chain ends at the root of its own component.
// If `required_root` is not kNone, the root of its component must be it.
ValidationReport validate_rooted_forest(const Graph& g, const RootedForest& f,
                                        Vertex required_root = kNone);

}  // namespace rst
