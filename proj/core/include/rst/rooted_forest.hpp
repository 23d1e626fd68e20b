#pragma once

#include <iosfwd>
#include <vector>

#include "rst/types.hpp"

namespace rst {

// A rooted spanning forest as a parent array: parent[r] == r exactly for
// roots, every other vertex has one parent, and chains reach a root.
// `levels` is filled by algorithms that compute hop distances (BFS); empty
// otherwise.
struct RootedForest {
  std::vector<Vertex> parent;
  std::vector<Vertex> roots;
  std::vector<std::int64_t> levels;
};

struct DepthStats {
  // Parallel to RootedForest::roots when computed via forest_depth.
  std::vector<std::pair<Vertex, std::int64_t>> per_root;
  std::int64_t max_depth = 0;
};

// Maximum parent-chain length per root, and the overall maximum. Walks chains
// iteratively with memoization; throws std::runtime_error if the parent array
// contains a cycle.
DepthStats forest_depth(const RootedForest& f);

// Parent dump format: one integer per line, line i holds parent[i].
void write_parent_array(std::ostream& out, const std::vector<Vertex>& parent);
std::vector<Vertex> read_parent_array(std::istream& in);

// Reconstructs the forest from a bare parent array (roots = self-parents).
RootedForest forest_from_parent(std::vector<Vertex> parent);

}  // namespace rst
