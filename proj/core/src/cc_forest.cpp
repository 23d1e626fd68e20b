#include "rst/cc_forest.hpp"

#include <stdexcept>
#include <utility>

namespace rst {

bool hook_step(const Graph& g, HookMode mode, std::vector<Vertex>& rep,
               std::vector<std::uint8_t>& tree_flag, CombineBuffer& slot,
               StepEngine& engine) {
  const std::int64_t n = g.n;
  const std::int64_t m = g.m;
  const Edge* edges = g.edges.data();
  Vertex* r = rep.data();
  CombineBuffer flags(2);  // [0] = any hook applied, [1] = rep uncompressed
  flags.fill(0);

  engine.parallel_for_step(m, [&](std::int64_t e) {
    Vertex ru = r[edges[e].u];
    Vertex rv = r[edges[e].v];
    if (r[ru] != ru || r[rv] != rv) {
      flags.combine_max(1, 1);
      return;
    }
    if (ru == rv) return;
    Vertex winner, loser;
    if (mode == HookMode::kMin) {
      winner = std::min(ru, rv);
      loser = std::max(ru, rv);
    } else {
      winner = std::max(ru, rv);
      loser = std::min(ru, rv);
    }
    slot.combine_min(loser, pack_key(winner, e));
  });
  if (flags.load(1) != 0)
    throw std::runtime_error("hooking ran on uncompressed labels");

  engine.parallel_for_step(n, [&](std::int64_t v) {
    std::int64_t key = slot.load(v);
    if (key == kKeyInf) return;
    r[v] = key_value(key);
    tree_flag[static_cast<std::size_t>(key_id(key))] = 1;
    slot.store(v, kKeyInf);
    flags.combine_max(0, 1);
  });
  return flags.load(0) != 0;
}

void jump_to_convergence(std::vector<Vertex>& rep, StepEngine& engine) {
  const std::int64_t n = static_cast<std::int64_t>(rep.size());
  std::vector<Vertex> buf(rep.size());
  Vertex* snap = rep.data();
  Vertex* next = buf.data();
  CombineBuffer done(1);

  const std::int64_t max_rounds = ceil_log2(std::max<std::int64_t>(n, 1)) + 2;
  for (std::int64_t round = 0;; ++round) {
    if (round > max_rounds)
      throw std::runtime_error("pointer jumping failed to converge");
    done.fill(1);
    engine.parallel_for_step(n, [&](std::int64_t v) {
      Vertex nv = snap[snap[v]];
      next[v] = nv;
      if (snap[nv] != nv) done.combine_min(0, 0);
    });
    std::swap(snap, next);
    if (done.load(0) == 1) break;
  }
  if (snap != rep.data()) rep.assign(snap, snap + n);
}

SpanningForest cc_spanning_forest(const Graph& g, StepEngine& engine) {
  const std::int64_t n = g.n;
  const std::int64_t m = g.m;
  SpanningForest out;
  out.labels.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> tree_flag(static_cast<std::size_t>(m), 0);
  CombineBuffer slot(n);

  Vertex* rep = out.labels.data();
  engine.parallel_for_step(n, [&](std::int64_t v) {
    rep[v] = v;
    slot.store(v, kKeyInf);
  });

  HookMode mode = HookMode::kMin;
  for (std::int64_t round = 0;; ++round) {
    if (round > n + 1)
      throw std::runtime_error("hooking failed to converge");
    if (!hook_step(g, mode, out.labels, tree_flag, slot, engine)) break;
    jump_to_convergence(out.labels, engine);
    mode = (mode == HookMode::kMin) ? HookMode::kMax : HookMode::kMin;
  }

  // Tree-edge compaction, charged at parallel prefix-sum cost.
  engine.charge(2 * ceil_log2(std::max<std::int64_t>(m, 2)) + 1, 3 * m);
  for (std::int64_t e = 0; e < m; ++e) {
    if (tree_flag[static_cast<std::size_t>(e)]) out.tree_edges.push_back(e);
  }
  return out;
}

}  // namespace rst
