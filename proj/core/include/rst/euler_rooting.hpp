#pragma once

#include <cstdint>
#include <vector>

#include "rst/graph.hpp"
#include "rst/rooted_forest.hpp"
#include "rst/step_engine.hpp"
#include "rst/types.hpp"

namespace rst {

// Directed-arc view of an undirected forest with T edges. Arc i traverses
// tree edge i from u to v, arc i + T traverses it back, so the reverse of
// arc e is (e + E/2) mod E with E = 2T. Arcs leaving one vertex are chained
// by `next` in (from, to)-sorted order; `first`/`last` bound that chain per
// vertex (kNone when the vertex has no arcs).
struct EulerStructure {
  std::int64_t num_vertices = 0;
  std::int64_t num_arcs = 0;
  std::vector<Vertex> from;
  std::vector<Vertex> to;
  std::vector<EdgeId> first;
  std::vector<EdgeId> last;
  std::vector<EdgeId> next;
  std::vector<EdgeId> succ;  // filled by compute_successor

  EdgeId rev(EdgeId e) const { return (e + num_arcs / 2) % num_arcs; }
};

// Arc layout plus per-vertex adjacency chains. The arc ordering is charged
// at parallel sort cost.
EulerStructure build_euler(std::int64_t n, const std::vector<Edge>& tree_edges,
                           StepEngine& engine);

// succ[e] = next[rev(e)], falling back to first[from[rev(e)]] at the end of
// a chain. On a tree this closes one cycle through all 2(n-1) arcs.
void compute_successor(EulerStructure& es, StepEngine& engine);

// Cuts each component's arc cycle so it becomes a chain starting at
// first[r]: the arc whose successor was first[r] is rev(last[r]), and its
// successor is set to kNone. Roots without arcs are skipped.
void break_cycles(EulerStructure& es, const std::vector<Vertex>& roots,
                  StepEngine& engine);

// Position of each arc in its chain, head = 0, by pointer jumping over
// predecessors. Throws "not a forest" if a chain fails to terminate.
std::vector<std::int64_t> list_rank(const EulerStructure& es,
                                    StepEngine& engine);

// Rooted forest from arc ranks: in each arc pair the higher-ranked arc is
// the return traversal, so its tail's parent is its head.
RootedForest derive_parents(const EulerStructure& es,
                            const std::vector<std::int64_t>& rank,
                            const std::vector<Vertex>& roots,
                            StepEngine& engine);

// Full pipeline over a labeled forest. labels must give one canonical value
// per connected component (as produced by cc_spanning_forest or
// oracle_components); the component containing designated_root is rooted
// there, every other component at its smallest vertex. Throws if tree_edges
// do not form a spanning forest of the labeled partition.
RootedForest euler_root_forest(std::int64_t n,
                               const std::vector<Edge>& tree_edges,
                               const std::vector<Vertex>& labels,
                               Vertex designated_root, StepEngine& engine);

// Connectivity forest + Euler rooting, the full "cc-euler" strategy.
RootedForest cc_euler_rst(const Graph& g, Vertex root, StepEngine& engine);

}  // namespace rst
