#include "rst/bfs_rst.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rst {

RootedForest bfs_rst(const Graph& g, Vertex root, StepEngine& engine) {
  const std::int64_t n = g.n;
  if (root < 0 || root >= n)
    throw std::runtime_error("root " + std::to_string(root) + " out of range");

  RootedForest f;
  f.parent.assign(static_cast<std::size_t>(n), kNone);
  f.levels.assign(static_cast<std::size_t>(n), kNone);
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> next(static_cast<std::size_t>(n), 0);
  CombineBuffer changed(1);
  CombineBuffer restart(1);

  Vertex* parent = f.parent.data();
  std::int64_t* level = f.levels.data();

  Vertex seed = root;
  engine.parallel_for_step(n, [&](std::int64_t v) {
    parent[v] = v;
    level[v] = (v == seed) ? 0 : kNone;
    cur[static_cast<std::size_t>(v)] = (v == seed) ? 1 : 0;
    next[static_cast<std::size_t>(v)] = 0;
  });
  f.roots.push_back(seed);

  while (true) {
    // Expand one level per step. A vertex that stays undiscovered feeds the
    // restart reduction instead, so when a level discovers nothing the next
    // component's seed is already known without a separate scan step.
    std::int64_t level_guard = 0;
    Vertex next_seed = kNone;
    for (std::int64_t d = 1;; ++d) {
      if (++level_guard > n + 1)
        throw std::runtime_error("BFS failed to converge");
      changed.fill(0);
      restart.fill(kKeyInf);
      engine.parallel_for_step(n, [&](std::int64_t v) {
        next[static_cast<std::size_t>(v)] = 0;
        if (level[v] != kNone) return;
        for (Vertex u : g.neighbors_of(v)) {
          if (cur[static_cast<std::size_t>(u)]) {
            level[v] = d;
            parent[v] = u;
            next[static_cast<std::size_t>(v)] = 1;
            changed.combine_max(0, 1);
            return;
          }
        }
        restart.combine_min(0, v);
      });
      cur.swap(next);
      if (changed.load(0) == 0) {
        if (restart.load(0) != kKeyInf) next_seed = restart.load(0);
        break;
      }
    }

    if (next_seed == kNone) break;
    seed = next_seed;
    f.roots.push_back(seed);
    engine.parallel_for_step(1, [&](std::int64_t) {
      level[seed] = 0;
      cur[static_cast<std::size_t>(seed)] = 1;
    });
  }

  return f;
}

}  // namespace rst
