#include "rst/pr_rst.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace rst {

namespace {

#ifndef NDEBUG
// Forest check after every round: parent must be acyclic with one
// self-loop per converged rep value.
void debug_check_forest(const PrState& st) {
  const std::int64_t n = st.n;
  std::vector<std::int8_t> state(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> walk;
  for (Vertex v = 0; v < n; ++v) {
    if (state[static_cast<std::size_t>(v)] != 0) continue;
    Vertex cur = v;
    walk.clear();
    while (state[static_cast<std::size_t>(cur)] == 0 &&
           st.parent[static_cast<std::size_t>(cur)] != cur) {
      state[static_cast<std::size_t>(cur)] = 1;
      walk.push_back(cur);
      cur = st.parent[static_cast<std::size_t>(cur)];
      if (state[static_cast<std::size_t>(cur)] == 1)
        throw std::logic_error("round left a cycle in parent");
    }
    state[static_cast<std::size_t>(cur)] = 2;
    for (Vertex w : walk) state[static_cast<std::size_t>(w)] = 2;
  }
}
#endif

}  // namespace

PrState make_pr_state(std::int64_t n, StepEngine& engine) {
  PrState st;
  st.n = n;
  st.anc_levels = std::max<std::int64_t>(ceil_log2(std::max<std::int64_t>(n, 1)), 1);
  st.parent.resize(static_cast<std::size_t>(n));
  st.rep.resize(static_cast<std::size_t>(n));
  st.scratch.resize(static_cast<std::size_t>(n));
  st.on_path.resize(static_cast<std::size_t>(n));
  st.mark_buf.resize(static_cast<std::size_t>(n));
  st.special_anc.resize(static_cast<std::size_t>(n * st.anc_levels));
  st.graft_slot = CombineBuffer(std::max<std::int64_t>(n, 1));

  const std::int64_t L = st.anc_levels;
  Vertex* parent = st.parent.data();
  Vertex* rep = st.rep.data();
  Vertex* scratch = st.scratch.data();
  std::uint8_t* on_path = st.on_path.data();
  std::uint8_t* mark_buf = st.mark_buf.data();
  Vertex* anc = st.special_anc.data();
  CombineBuffer& slot = st.graft_slot;
  engine.parallel_for_step(n, [&](std::int64_t v) {
    parent[v] = v;
    rep[v] = v;
    scratch[v] = kNone;
    on_path[v] = 0;
    mark_buf[v] = 0;
    for (std::int64_t k = 0; k < L; ++k) anc[v * L + k] = v;
    slot.store(v, kKeyInf);
  });
  return st;
}

std::vector<Graft> graft_round(const Graph& g, PrState& st, HookMode mode,
                               StepEngine& engine) {
  const std::int64_t n = st.n;
  const std::int64_t m = g.m;
  const Edge* edges = g.edges.data();
  Vertex* rep = st.rep.data();
  CombineBuffer& slot = st.graft_slot;
  CombineBuffer flags(2);  // [0] = any candidate, [1] = rep uncompressed
  flags.fill(0);

  engine.parallel_for_step(m, [&](std::int64_t e) {
    Vertex ru = rep[edges[e].u];
    Vertex rv = rep[edges[e].v];
    if (rep[ru] != ru || rep[rv] != rv) {
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
    flags.combine_max(0, 1);
  });
  if (flags.load(1) != 0)
    throw std::runtime_error("grafting ran on uncompressed reps");

  st.grafts.clear();
  if (flags.load(0) == 0) return st.grafts;

  // Resolve winners against the frozen rep, then update rep in a second
  // step: the resolve bodies read rep entries that the update overwrites.
  Vertex* scratch = st.scratch.data();
  std::uint8_t* on_path = st.on_path.data();
  std::mutex append;
  engine.parallel_for_step(n, [&](std::int64_t v) {
    std::int64_t key = slot.load(v);
    if (key == kKeyInf) return;
    EdgeId e = key_id(key);
    Vertex u = (rep[edges[e].u] == v) ? edges[e].u : edges[e].v;
    Vertex w = (u == edges[e].u) ? edges[e].v : edges[e].u;
    on_path[u] = 1;
    scratch[u] = w;
    std::lock_guard<std::mutex> lock(append);
    st.grafts.push_back(Graft{u, v});
  });
  engine.parallel_for_step(n, [&](std::int64_t v) {
    std::int64_t key = slot.load(v);
    if (key == kKeyInf) return;
    rep[v] = key_value(key);
    slot.store(v, kKeyInf);
  });

  std::sort(st.grafts.begin(), st.grafts.end(),
            [](const Graft& a, const Graft& b) { return a.r < b.r; });
  return st.grafts;
}

std::int64_t mark_paths(PrState& st, StepEngine& engine) {
  const std::int64_t n = st.n;
  const std::int64_t L = st.anc_levels;
  const Vertex* anc = st.special_anc.data();
  std::uint8_t* cur = st.on_path.data();
  std::uint8_t* fresh = st.mark_buf.data();
  CombineBuffer grew(1);

  std::int64_t rounds = 0;
  for (std::int64_t k = 0; k < L; ++k) {
    grew.fill(0);
    engine.parallel_for_step(n, [&](std::int64_t v) {
      if (!cur[v]) return;
      Vertex a = anc[v * L + k];
      if (!cur[a]) {
        fresh[a] = 1;
        grew.combine_max(0, 1);
      }
    });
    ++rounds;
    if (grew.load(0) == 0) break;
    engine.parallel_for_step(n, [&](std::int64_t v) {
      if (fresh[v]) {
        cur[v] = 1;
        fresh[v] = 0;
      }
    });
  }
  return rounds;
}

void mark_path(PrState& st, Vertex u, Vertex r, StepEngine& engine) {
  if (u < 0 || u >= st.n || r < 0 || r >= st.n)
    throw std::runtime_error("mark_path vertex out of range");
  std::uint8_t* on_path = st.on_path.data();
  engine.parallel_for_step(1, [&](std::int64_t) { on_path[u] = 1; });
  mark_paths(st, engine);
  if (!st.on_path[static_cast<std::size_t>(r)] ||
      st.parent[static_cast<std::size_t>(r)] != r)
    throw std::runtime_error("path marking corrupted: " + std::to_string(r) +
                             " is not the root above " + std::to_string(u));
}

void reverse_paths(PrState& st, StepEngine& engine) {
  const std::int64_t n = st.n;
  Vertex* parent = st.parent.data();
  Vertex* scratch = st.scratch.data();
  std::uint8_t* on_path = st.on_path.data();
  CombineBuffer bad(1);
  bad.fill(0);

  engine.parallel_for_step(n, [&](std::int64_t v) {
    if (!on_path[v]) return;
    Vertex p = parent[v];
    if (p != v) scratch[p] = v;
  });
  engine.parallel_for_step(n, [&](std::int64_t v) {
    if (!on_path[v]) return;
    Vertex s = scratch[v];
    if (s == kNone) {
      bad.combine_max(0, 1);
      return;
    }
    parent[v] = s;
    scratch[v] = kNone;
    on_path[v] = 0;
  });
  if (bad.load(0) != 0)
    throw std::runtime_error("reversal found a marked vertex with no source");
}

void reverse_path(PrState& st, Vertex u, Vertex r, Vertex partner,
                  StepEngine& engine) {
  if (!st.on_path[static_cast<std::size_t>(u)] ||
      !st.on_path[static_cast<std::size_t>(r)])
    throw std::runtime_error("reverse_path called without marks");
  Vertex* scratch = st.scratch.data();
  engine.parallel_for_step(1, [&](std::int64_t) { scratch[u] = partner; });
  reverse_paths(st, engine);
}

std::int64_t batched_jump(PrState& st, std::int64_t batch,
                          StepEngine& engine) {
  if (batch < 1 || batch > 20)
    throw std::runtime_error("jump batch out of range [1, 20]");
  const std::int64_t n = st.n;
  const std::int64_t hops = std::int64_t{1} << batch;
  std::vector<Vertex> buf(st.rep.size());
  Vertex* snap = st.rep.data();
  Vertex* next = buf.data();
  CombineBuffer done(1);
  st.shortcut_history.clear();

  const std::int64_t max_barriers =
      (ceil_log2(std::max<std::int64_t>(n, 1)) + batch - 1) / batch + 2;
  std::int64_t barriers = 0;
  while (true) {
    if (barriers > max_barriers)
      throw std::runtime_error("pointer jumping detected a representative cycle");
    done.fill(1);
    engine.parallel_for_step(n, [&](std::int64_t v) {
      Vertex x = snap[v];
      for (std::int64_t t = 1; t < hops; ++t) {
        Vertex nx = snap[x];
        if (nx == x) break;
        x = nx;
      }
      next[v] = x;
      if (snap[x] != x) done.combine_min(0, 0);
    });
    std::swap(snap, next);
    ++barriers;
    st.shortcut_history.emplace_back(snap, snap + n);
    if (done.load(0) == 1) break;
  }
  if (snap != st.rep.data()) st.rep.assign(snap, snap + n);
  return barriers;
}

void rebuild_special_ancestors(PrState& st, StepEngine& engine) {
  const std::int64_t n = st.n;
  const std::int64_t L = st.anc_levels;
  const Vertex* parent = st.parent.data();
  Vertex* anc = st.special_anc.data();
  engine.parallel_for_step(n, [&](std::int64_t v) { anc[v * L] = parent[v]; });
  for (std::int64_t k = 1; k < L; ++k) {
    engine.parallel_for_step(n, [&](std::int64_t v) {
      anc[v * L + k] = anc[anc[v * L + (k - 1)] * L + (k - 1)];
    });
  }
}

RootedForest pr_rst(const Graph& g, Vertex root, StepEngine& engine,
                    std::int64_t jump_batch) {
  const std::int64_t n = g.n;
  if (root < 0 || root >= n)
    throw std::runtime_error("root " + std::to_string(root) + " out of range");

  PrState st = make_pr_state(n, engine);
  HookMode mode = HookMode::kMin;
  for (std::int64_t round = 0;; ++round) {
    if (round > n + 1)
      throw std::runtime_error("grafting failed to converge");
    const std::vector<Graft>& grafts = graft_round(g, st, mode, engine);
    if (grafts.empty()) break;
    mark_paths(st, engine);
    for (const Graft& gr : grafts) {
      if (!st.on_path[static_cast<std::size_t>(gr.r)] ||
          st.parent[static_cast<std::size_t>(gr.r)] != gr.r)
        throw std::runtime_error("path marking corrupted: " +
                                 std::to_string(gr.r) +
                                 " is not the root above " +
                                 std::to_string(gr.u));
    }
    reverse_paths(st, engine);
    batched_jump(st, jump_batch, engine);
    rebuild_special_ancestors(st, engine);
    mode = (mode == HookMode::kMin) ? HookMode::kMax : HookMode::kMin;
#ifndef NDEBUG
    debug_check_forest(st);
#endif
  }

  // The tree containing `root` converged on rep[root]; re-root it there.
  Vertex emergent = st.rep[static_cast<std::size_t>(root)];
  if (emergent != root) {
    mark_path(st, root, emergent, engine);
    reverse_path(st, root, emergent, root, engine);
  }

  RootedForest f;
  f.parent = std::move(st.parent);
  const std::int64_t comp_scan =
      2 * ceil_log2(std::max<std::int64_t>(n, 2)) + 1;
  engine.charge(comp_scan, 3 * n);
  for (Vertex v = 0; v < n; ++v) {
    if (f.parent[static_cast<std::size_t>(v)] == v) f.roots.push_back(v);
  }
  return f;
}

}  // namespace rst
