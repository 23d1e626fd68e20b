#include "rst/validate.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace rst {

namespace {

struct UnionFind {
  std::vector<Vertex> rep;

  explicit UnionFind(std::int64_t n) : rep(static_cast<std::size_t>(n)) {
    for (std::int64_t i = 0; i < n; ++i) rep[static_cast<std::size_t>(i)] = i;
  }

  Vertex find(Vertex v) {
    Vertex r = v;
    while (rep[static_cast<std::size_t>(r)] != r)
      r = rep[static_cast<std::size_t>(r)];
    while (rep[static_cast<std::size_t>(v)] != r) {
      Vertex next = rep[static_cast<std::size_t>(v)];
      rep[static_cast<std::size_t>(v)] = r;
      v = next;
    }
    return r;
  }

  // Keeps the smaller id as representative so labels are canonical.
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    rep[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

std::vector<Vertex> oracle_components(const Graph& g) {
  UnionFind uf(g.n);
  for (const Edge& e : g.edges) uf.unite(e.u, e.v);
  std::vector<Vertex> label(static_cast<std::size_t>(g.n));
  for (Vertex v = 0; v < g.n; ++v)
    label[static_cast<std::size_t>(v)] = uf.find(v);
  return label;
}

std::vector<Vertex> oracle_root_tree(std::int64_t n,
                                     const std::vector<Edge>& tree_edges,
                                     Vertex root) {
  if (root < 0 || root >= n) throw std::runtime_error("root out of range");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : tree_edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::runtime_error("tree edge endpoint out of range");
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n), kNone);
  parent[static_cast<std::size_t>(root)] = root;
  std::vector<Vertex> stack = {root};
  std::int64_t visited = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] != kNone) {
        if (w != parent[static_cast<std::size_t>(v)])
          throw std::runtime_error("edge set contains a cycle");
        continue;
      }
      parent[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
      ++visited;
    }
  }
  if (visited != n)
    throw std::runtime_error("edge set does not span all vertices");
  return parent;
}

std::vector<std::int64_t> oracle_bfs_levels(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.n) throw std::runtime_error("root out of range");
  std::vector<std::int64_t> level(static_cast<std::size_t>(g.n), kNone);
  std::deque<Vertex> queue;
  level[static_cast<std::size_t>(root)] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors_of(v)) {
      if (level[static_cast<std::size_t>(w)] != kNone) continue;
      level[static_cast<std::size_t>(w)] =
          level[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return level;
}

ValidationReport validate_rooted_forest(const Graph& g, const RootedForest& f,
                                        Vertex required_root) {
  ValidationReport report;
  const std::int64_t n = g.n;
  if (static_cast<std::int64_t>(f.parent.size()) != n) {
    report.fail("parent array has size " + std::to_string(f.parent.size()) +
                ", graph has " + std::to_string(n) + " vertices");
    return report;
  }

  // Roots list must be exactly the self-parents.
  std::vector<Vertex> self_parents;
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = f.parent[static_cast<std::size_t>(v)];
    if (p < 0 || p >= n) {
      report.fail("parent[" + std::to_string(v) + "] = " + std::to_string(p) +
                  " out of range");
      return report;
    }
    if (p == v) self_parents.push_back(v);
  }
  std::vector<Vertex> declared = f.roots;
  std::sort(declared.begin(), declared.end());
  if (declared != self_parents) {
    report.fail("declared roots do not match self-parent vertices (" +
                std::to_string(declared.size()) + " declared, " +
                std::to_string(self_parents.size()) + " self-parents)");
  }

  // Every parent edge must be a graph edge.
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = f.parent[static_cast<std::size_t>(v)];
    if (p == v) continue;
    if (!g.has_edge(v, p)) {
      report.fail("parent edge (" + std::to_string(v) + ", " +
                  std::to_string(p) + ") is not a graph edge");
    }
  }
  if (!report.valid) return report;

  // Acyclic chains, and the root each vertex reaches.
  std::vector<Vertex> chain_root(static_cast<std::size_t>(n), kNone);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (chain_root[static_cast<std::size_t>(v)] != kNone) continue;
    Vertex cur = v;
    stack.clear();
    while (chain_root[static_cast<std::size_t>(cur)] == kNone) {
      Vertex p = f.parent[static_cast<std::size_t>(cur)];
      if (p == cur) {
        chain_root[static_cast<std::size_t>(cur)] = cur;
        break;
      }
      // -2 marks "on the current walk" without an extra array.
      chain_root[static_cast<std::size_t>(cur)] = -2;
      stack.push_back(cur);
      cur = p;
      if (chain_root[static_cast<std::size_t>(cur)] == -2) {
        report.fail("parent chain cycle through vertex " + std::to_string(cur));
        return report;
      }
    }
    Vertex r = chain_root[static_cast<std::size_t>(cur)];
    for (Vertex w : stack) chain_root[static_cast<std::size_t>(w)] = r;
  }

  // One root per component; chains stay inside their component.
  std::vector<Vertex> comp = oracle_components(g);
  std::unordered_map<Vertex, Vertex> root_in_comp;  // comp label -> root
  for (Vertex r : self_parents) {
    Vertex c = comp[static_cast<std::size_t>(r)];
    auto [it, inserted] = root_in_comp.emplace(c, r);
    if (!inserted) {
      report.fail("component " + std::to_string(c) + " has two roots: " +
                  std::to_string(it->second) + " and " + std::to_string(r));
    }
  }
  std::unordered_map<Vertex, std::int64_t> comp_sizes;
  for (Vertex v = 0; v < n; ++v) ++comp_sizes[comp[static_cast<std::size_t>(v)]];
  if (root_in_comp.size() != comp_sizes.size()) {
    report.fail("forest has " + std::to_string(root_in_comp.size()) +
                " roots but graph has " + std::to_string(comp_sizes.size()) +
                " components");
  }
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = chain_root[static_cast<std::size_t>(v)];
    if (comp[static_cast<std::size_t>(r)] != comp[static_cast<std::size_t>(v)]) {
      report.fail("vertex " + std::to_string(v) +
                  " reaches a root in a different component");
      return report;
    }
  }

  if (required_root != kNone) {
    if (required_root < 0 || required_root >= n) {
      report.fail("required root out of range");
    } else if (f.parent[static_cast<std::size_t>(required_root)] !=
               required_root) {
      report.fail("vertex " + std::to_string(required_root) +
                  " was requested as root but is not one");
    }
  }
  return report;
}

}  // namespace rst
