#pragma once

#include "rst/graph.hpp"
#include "rst/rooted_forest.hpp"
#include "rst/step_engine.hpp"
#include "rst/types.hpp"

namespace rst {

// Level-synchronous BFS rooted at `root`, one engine step per level.
//
// Discovery is pull-based: at level d every undiscovered vertex scans its
// (sorted) neighbor list for a frontier member and adopts the first hit,
// which is the smallest-id discoverer. Each vertex writes only its own
// slots, so results are identical for any worker count.
//
// Components not containing `root` are seeded from their smallest
// undiscovered vertex, found with one min-reduction step per extra
// component. Steps total depth(root) + 2 for a connected graph.
//
// The returned forest carries levels[] (hop distance from each vertex's
// root).
RootedForest bfs_rst(const Graph& g, Vertex root, StepEngine& engine);

}  // namespace rst
