#pragma once

#include <cstdint>

namespace rst {

using Vertex = std::int64_t;
using EdgeId = std::int64_t;

// Sentinel for "no vertex" / "no edge" slots in parent, successor and
// adjacency-link arrays.
inline constexpr std::int64_t kNone = -1;

// An undirected edge. Normalized edges satisfy u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Smallest k with 2^k >= x (x >= 1). ceil_log2(1) == 0.
constexpr int ceil_log2(std::int64_t x) {
  int k = 0;
  std::int64_t p = 1;
  while (p < x) {
    p <<= 1;
    ++k;
  }
  return k;
}

}  // namespace rst
