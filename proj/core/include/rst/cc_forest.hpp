#pragma once

#include <cstdint>
#include <vector>

#include "rst/graph.hpp"
#include "rst/step_engine.hpp"
#include "rst/types.hpp"

namespace rst {

enum class HookMode { kMin, kMax };

struct SpanningForest {
  std::vector<Vertex> labels;      // converged representative per vertex
  std::vector<EdgeId> tree_edges;  // indices into Graph::edges, ascending
};

// One hooking round, two engine steps. Every cross edge proposes to attach
// the losing endpoint's representative (the larger one in kMin mode, the
// smaller in kMax) beneath the winning one; ties on a root are broken by a
// min-reduction over (target, edge id), and the winning edge is flagged as
// a tree edge. Requires rep fully compressed on entry: rep[rep[v]] ==
// rep[v]. Returns true if any root was re-parented.
bool hook_step(const Graph& g, HookMode mode, std::vector<Vertex>& rep,
               std::vector<std::uint8_t>& tree_flag, CombineBuffer& slot,
               StepEngine& engine);

// Pointer-jumps rep to full compression, one step per halving. Detects the
// fixpoint inside the same step, so an L-chain costs exactly
// ceil(log2(L)) steps. Requires acyclic rep chains: a cycle either trips
// the round guard (throws) or, for even lengths, collapses into separate
// fixpoints, so the guard is a backstop, not a cycle detector. Hooking
// never creates cycles because each round re-points roots in one
// direction only.
void jump_to_convergence(std::vector<Vertex>& rep, StepEngine& engine);

// Spanning forest by alternating min/max hooking rounds with pointer
// jumping in between. labels is the converged representative array (one
// distinct value per connected component); tree_edges has exactly
// n - #components entries.
SpanningForest cc_spanning_forest(const Graph& g, StepEngine& engine);

}  // namespace rst
