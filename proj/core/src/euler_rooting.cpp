#include "rst/euler_rooting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "rst/cc_forest.hpp"

namespace rst {

EulerStructure build_euler(std::int64_t n, const std::vector<Edge>& tree_edges,
                           StepEngine& engine) {
  const std::int64_t T = static_cast<std::int64_t>(tree_edges.size());
  const std::int64_t E = 2 * T;
  EulerStructure es;
  es.num_vertices = n;
  es.num_arcs = E;
  es.from.resize(static_cast<std::size_t>(E));
  es.to.resize(static_cast<std::size_t>(E));
  es.first.resize(static_cast<std::size_t>(n));
  es.last.resize(static_cast<std::size_t>(n));
  es.next.resize(static_cast<std::size_t>(E));

  const Edge* edges = tree_edges.data();
  Vertex* from = es.from.data();
  Vertex* to = es.to.data();
  EdgeId* fst = es.first.data();
  EdgeId* lst = es.last.data();
  engine.parallel_for_step(std::max(n, E), [&](std::int64_t i) {
    if (i < n) {
      fst[i] = kNone;
      lst[i] = kNone;
    }
    if (i < E) {
      if (i < T) {
        from[i] = edges[i].u;
        to[i] = edges[i].v;
      } else {
        from[i] = edges[i - T].v;
        to[i] = edges[i - T].u;
      }
    }
  });

  // Arc order by (from, to); keys are unique on a simple graph. The
  // host-side sort stands in for a parallel sort and is charged as one.
  std::vector<EdgeId> perm(static_cast<std::size_t>(E));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](EdgeId a, EdgeId b) {
    if (from[a] != from[b]) return from[a] < from[b];
    return to[a] < to[b];
  });
  const std::int64_t sort_steps = ceil_log2(std::max<std::int64_t>(E, 2));
  engine.charge(sort_steps, E * sort_steps);

  const EdgeId* p = perm.data();
  EdgeId* first = es.first.data();
  EdgeId* last = es.last.data();
  EdgeId* next = es.next.data();
  engine.parallel_for_step(E, [&](std::int64_t pos) {
    EdgeId e = p[pos];
    Vertex v = from[e];
    if (pos == 0 || from[p[pos - 1]] != v) first[v] = e;
    if (pos == E - 1 || from[p[pos + 1]] != v) {
      last[v] = e;
      next[e] = kNone;
    } else {
      next[e] = p[pos + 1];
    }
  });
  return es;
}

void compute_successor(EulerStructure& es, StepEngine& engine) {
  const std::int64_t E = es.num_arcs;
  es.succ.resize(static_cast<std::size_t>(E));
  EdgeId* succ = es.succ.data();
  const EdgeId* next = es.next.data();
  const EdgeId* first = es.first.data();
  const Vertex* from = es.from.data();
  engine.parallel_for_step(E, [&](std::int64_t e) {
    EdgeId r = es.rev(e);
    succ[e] = (next[r] != kNone) ? next[r] : first[from[r]];
  });
}

void break_cycles(EulerStructure& es, const std::vector<Vertex>& roots,
                  StepEngine& engine) {
  if (es.succ.empty() && es.num_arcs > 0)
    throw std::runtime_error("break_cycles called before compute_successor");
  const Vertex* r = roots.data();
  const EdgeId* last = es.last.data();
  EdgeId* succ = es.succ.data();
  engine.parallel_for_step(static_cast<std::int64_t>(roots.size()),
                           [&](std::int64_t i) {
                             EdgeId l = last[r[i]];
                             if (l == kNone) return;
                             succ[es.rev(l)] = kNone;
                           });
}

std::vector<std::int64_t> list_rank(const EulerStructure& es,
                                    StepEngine& engine) {
  const std::int64_t E = es.num_arcs;
  std::vector<EdgeId> pred(static_cast<std::size_t>(E));
  std::vector<EdgeId> jump_a(static_cast<std::size_t>(E));
  std::vector<EdgeId> jump_b(static_cast<std::size_t>(E));
  std::vector<std::int64_t> dist_a(static_cast<std::size_t>(E));
  std::vector<std::int64_t> dist_b(static_cast<std::size_t>(E));
  const EdgeId* succ = es.succ.data();

  EdgeId* pr = pred.data();
  engine.parallel_for_step(E, [&](std::int64_t e) { pr[e] = kNone; });
  engine.parallel_for_step(E, [&](std::int64_t e) {
    if (succ[e] != kNone) pr[succ[e]] = e;
  });

  EdgeId* jump = jump_a.data();
  EdgeId* jnext = jump_b.data();
  std::int64_t* dist = dist_a.data();
  std::int64_t* dnext = dist_b.data();
  engine.parallel_for_step(E, [&](std::int64_t e) {
    jump[e] = pr[e];
    dist[e] = (pr[e] == kNone) ? 0 : 1;
  });

  CombineBuffer done(1);
  const std::int64_t max_rounds = ceil_log2(std::max<std::int64_t>(E, 2)) + 2;
  for (std::int64_t round = 0; E > 0; ++round) {
    if (round > max_rounds)
      throw std::runtime_error("list ranking failed to converge: not a forest");
    done.fill(1);
    engine.parallel_for_step(E, [&](std::int64_t e) {
      EdgeId j = jump[e];
      if (j == kNone) {
        jnext[e] = kNone;
        dnext[e] = dist[e];
        return;
      }
      jnext[e] = jump[j];
      dnext[e] = dist[e] + dist[j];
      if (jump[j] != kNone) done.combine_min(0, 0);
    });
    std::swap(jump, jnext);
    std::swap(dist, dnext);
    if (done.load(0) == 1) break;
  }
  std::vector<std::int64_t> rank(static_cast<std::size_t>(E));
  std::copy(dist, dist + E, rank.begin());
  return rank;
}

RootedForest derive_parents(const EulerStructure& es,
                            const std::vector<std::int64_t>& rank,
                            const std::vector<Vertex>& roots,
                            StepEngine& engine) {
  const std::int64_t n = es.num_vertices;
  const std::int64_t T = es.num_arcs / 2;
  RootedForest f;
  f.parent.resize(static_cast<std::size_t>(n));
  f.roots = roots;
  std::sort(f.roots.begin(), f.roots.end());

  Vertex* parent = f.parent.data();
  engine.parallel_for_step(n, [&](std::int64_t v) { parent[v] = v; });

  const Vertex* from = es.from.data();
  const Vertex* to = es.to.data();
  const std::int64_t* rk = rank.data();
  engine.parallel_for_step(T, [&](std::int64_t i) {
    // The higher-ranked arc of the pair leaves the child's subtree.
    EdgeId ret = (rk[i] > rk[i + T]) ? i : i + T;
    parent[from[ret]] = to[ret];
  });
  return f;
}

RootedForest euler_root_forest(std::int64_t n,
                               const std::vector<Edge>& tree_edges,
                               const std::vector<Vertex>& labels,
                               Vertex designated_root, StepEngine& engine) {
  if (static_cast<std::int64_t>(labels.size()) != n)
    throw std::runtime_error("labels size does not match vertex count");
  if (designated_root != kNone && (designated_root < 0 || designated_root >= n))
    throw std::runtime_error("designated root out of range");

  // Smallest vertex per component label; one reduction step.
  CombineBuffer min_vertex(std::max<std::int64_t>(n, 1));
  min_vertex.fill(kKeyInf);
  const Vertex* lab = labels.data();
  engine.parallel_for_step(n, [&](std::int64_t v) {
    min_vertex.combine_min(lab[v], v);
  });
  if (designated_root != kNone)
    min_vertex.store(lab[designated_root], designated_root);

  std::vector<Vertex> roots;
  for (std::int64_t v = 0; v < n; ++v) {
    if (min_vertex.load(v) != kKeyInf) roots.push_back(min_vertex.load(v));
  }
  engine.charge(2 * ceil_log2(std::max<std::int64_t>(n, 2)) + 1, 3 * n);

  const std::int64_t components = static_cast<std::int64_t>(roots.size());
  if (static_cast<std::int64_t>(tree_edges.size()) != n - components)
    throw std::runtime_error(
        "edge count does not match a spanning forest of the labeling");

  EulerStructure es = build_euler(n, tree_edges, engine);
  compute_successor(es, engine);
  break_cycles(es, roots, engine);
  std::vector<std::int64_t> rank = list_rank(es, engine);
  return derive_parents(es, rank, roots, engine);
}

RootedForest cc_euler_rst(const Graph& g, Vertex root, StepEngine& engine) {
  if (root < 0 || root >= g.n)
    throw std::runtime_error("root " + std::to_string(root) + " out of range");
  SpanningForest sf = cc_spanning_forest(g, engine);
  std::vector<Edge> tree_edges;
  tree_edges.reserve(sf.tree_edges.size());
  for (EdgeId e : sf.tree_edges)
    tree_edges.push_back(g.edges[static_cast<std::size_t>(e)]);
  return euler_root_forest(g.n, tree_edges, sf.labels, root, engine);
}

}  // namespace rst
