#pragma once

#include <cstdint>
#include <vector>

#include "rst/cc_forest.hpp"
#include "rst/graph.hpp"
#include "rst/rooted_forest.hpp"
#include "rst/step_engine.hpp"
#include "rst/types.hpp"

namespace rst {

// One tree-merge decision: u joins another tree across an edge, after the
// path from u up to r (the root of u's current tree) has been reversed.
struct Graft {
  Vertex u;
  Vertex r;
  friend bool operator==(const Graft&, const Graft&) = default;
};

// Working state of the path-reversal algorithm. parent always encodes a
// forest with one self-loop per tree; rep tracks tree membership and is
// compressed between rounds; special_anc[v][k] is v's 2^k-step ancestor,
// clamped at the root. scratch holds each marked vertex's pending new
// parent during a reversal.
struct PrState {
  std::int64_t n = 0;
  std::int64_t anc_levels = 0;
  std::vector<Vertex> parent;
  std::vector<Vertex> rep;
  std::vector<Vertex> scratch;
  std::vector<std::uint8_t> on_path;
  std::vector<std::uint8_t> mark_buf;
  std::vector<Vertex> special_anc;  // n * anc_levels, row-major
  std::vector<Graft> grafts;        // grafts of the latest round
  std::vector<std::vector<Vertex>> shortcut_history;  // rep per jump barrier
  CombineBuffer graft_slot;

  Vertex anc(Vertex v, std::int64_t k) const {
    return special_anc[static_cast<std::size_t>(v * anc_levels + k)];
  }
};

// Fresh state over n singleton trees (one init step).
PrState make_pr_state(std::int64_t n, StepEngine& engine);

// One grafting round: every cross edge proposes to hang the losing
// endpoint's tree (larger rep in kMin mode, smaller in kMax) under the
// winning one; per losing root the lexicographically smallest
// (target, edge id) proposal wins. Winners seed on_path/scratch for the
// reversal and the losing rep is re-pointed. Returns the grafts, sorted by
// r. Requires rep compressed.
std::vector<Graft> graft_round(const Graph& g, PrState& st, HookMode mode,
                               StepEngine& engine);

// Doubling rounds over the currently seeded on_path markers: round k
// propagates marks along special_anc[.][k], so after at most anc_levels
// rounds every ancestor of every seed is marked. Returns the number of
// rounds that ran. Stops early once a round adds nothing.
std::int64_t mark_paths(PrState& st, StepEngine& engine);

// Marks exactly the u -> r parent chain (r must be the root of u's tree).
// Throws if r does not end up marked as a root.
void mark_path(PrState& st, Vertex u, Vertex r, StepEngine& engine);

// Reverses every marked path and attaches each path's deepest vertex to
// its recorded partner: one step proposes scratch[parent[v]] = v for every
// marked non-root, one step commits parent[v] = scratch[v] and clears the
// marks. Paths must be vertex-disjoint, which grafting guarantees because
// each round grafts distinct trees.
void reverse_paths(PrState& st, StepEngine& engine);

// Single-path form: marks must already cover u -> r; u's new parent
// becomes `partner` (pass u to make it a root).
void reverse_path(PrState& st, Vertex u, Vertex r, Vertex partner,
                  StepEngine& engine);

// Compresses rep, 2^batch snapshot hops per element per barrier, so a
// chain of length L settles in ceil(log2(L) / batch) barriers. Appends the
// rep snapshot after every barrier to shortcut_history (cleared first).
// Returns the barrier count. Requires acyclic rep chains; a cycle that
// does not collapse on its own trips the barrier guard, which throws.
std::int64_t batched_jump(PrState& st, std::int64_t batch,
                          StepEngine& engine);

// Recomputes the full ancestor table from parent, one step per level.
void rebuild_special_ancestors(PrState& st, StepEngine& engine);

// Full algorithm: rounds of {graft, mark, reverse, jump, rebuild} until no
// graft occurs, then a final re-rooting reversal so the component
// containing `root` is rooted exactly there. Other components end up
// rooted at the vertex their tree converged on.
RootedForest pr_rst(const Graph& g, Vertex root, StepEngine& engine,
                    std::int64_t jump_batch = 5);

}  // namespace rst
