#include "rst/rooted_forest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rst {

DepthStats forest_depth(const RootedForest& f) {
  const std::int64_t n = static_cast<std::int64_t>(f.parent.size());
  // depth[v] = hops from v to its root; -1 = unknown, -2 = on current walk.
  std::vector<std::int64_t> depth(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (depth[static_cast<std::size_t>(v)] >= 0) continue;
    Vertex cur = v;
    stack.clear();
    while (depth[static_cast<std::size_t>(cur)] < 0) {
      if (depth[static_cast<std::size_t>(cur)] == -2) {
        throw std::runtime_error("parent array contains a cycle at vertex " +
                                 std::to_string(cur));
      }
      depth[static_cast<std::size_t>(cur)] = -2;
      stack.push_back(cur);
      Vertex p = f.parent[static_cast<std::size_t>(cur)];
      if (p < 0 || p >= n) {
        throw std::runtime_error("parent out of range at vertex " +
                                 std::to_string(cur));
      }
      if (p == cur) {
        depth[static_cast<std::size_t>(cur)] = 0;
        stack.pop_back();
        break;
      }
      cur = p;
    }
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      Vertex p = f.parent[static_cast<std::size_t>(w)];
      depth[static_cast<std::size_t>(w)] =
          depth[static_cast<std::size_t>(p)] + 1;
    }
  }

  // Max depth per root: walk each vertex's chain head via memoized root.
  std::vector<Vertex> root_of(static_cast<std::size_t>(n), kNone);
  for (Vertex v = 0; v < n; ++v) {
    Vertex cur = v;
    stack.clear();
    while (root_of[static_cast<std::size_t>(cur)] == kNone) {
      Vertex p = f.parent[static_cast<std::size_t>(cur)];
      if (p == cur) {
        root_of[static_cast<std::size_t>(cur)] = cur;
        break;
      }
      stack.push_back(cur);
      cur = p;
    }
    Vertex r = root_of[static_cast<std::size_t>(cur)];
    while (!stack.empty()) {
      root_of[static_cast<std::size_t>(stack.back())] = r;
      stack.pop_back();
    }
  }

  DepthStats stats;
  std::vector<Vertex> roots = f.roots;
  if (roots.empty()) {
    for (Vertex v = 0; v < n; ++v) {
      if (f.parent[static_cast<std::size_t>(v)] == v) roots.push_back(v);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<std::int64_t> max_for(roots.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = root_of[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(roots.begin(), roots.end(), r);
    if (it == roots.end() || *it != r) {
      throw std::runtime_error("vertex " + std::to_string(v) +
                               " reaches undeclared root " + std::to_string(r));
    }
    std::size_t idx = static_cast<std::size_t>(it - roots.begin());
    max_for[idx] = std::max(max_for[idx], depth[static_cast<std::size_t>(v)]);
  }
  stats.per_root.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    stats.per_root.emplace_back(roots[i], max_for[i]);
    stats.max_depth = std::max(stats.max_depth, max_for[i]);
  }
  return stats;
}

void write_parent_array(std::ostream& out, const std::vector<Vertex>& parent) {
  for (Vertex p : parent) out << p << '\n';
}

std::vector<Vertex> read_parent_array(std::istream& in) {
  std::vector<Vertex> parent;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* b = line.data();
    const char* e = b + line.size();
    while (b < e && (*b == ' ' || *b == '\t' || *b == '\r')) ++b;
    while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
    if (b == e) continue;
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e) {
      throw std::runtime_error("bad parent entry on line " +
                               std::to_string(line_no));
    }
    parent.push_back(value);
  }
  return parent;
}

RootedForest forest_from_parent(std::vector<Vertex> parent) {
  RootedForest f;
  f.parent = std::move(parent);
  const std::int64_t n = static_cast<std::int64_t>(f.parent.size());
  for (Vertex v = 0; v < n; ++v) {
    if (f.parent[static_cast<std::size_t>(v)] == v) f.roots.push_back(v);
  }
  return f;
}

}  // namespace rst
