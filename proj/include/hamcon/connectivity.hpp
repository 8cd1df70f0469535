#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "hamcon/graph.hpp"

namespace hamcon {

/// Partition of V(G) into connected components; each component is sorted and
/// components are ordered by their smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Number of components of G - S. Vertices of S must be in range.
inline std::size_t component_count_without(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.order();
  std::vector<bool> gone(n, false);
  for (Vertex v : removed) {
    if (v >= n) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    gone[v] = true;
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (gone[root] || seen[root]) continue;
    ++count;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

namespace detail {

// Max number of internally vertex-disjoint s-t paths (s, t nonadjacent), capped
// at `limit`. Unit-capacity flow on the split graph: v_in = 2v, v_out = 2v + 1.
inline std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  const std::size_t n = g.order();
  const std::size_t nodes = 2 * n;
  const int inf = static_cast<int>(n) + 1;
  std::vector<int> cap(nodes * nodes, 0);
  auto at = [&](std::size_t a, std::size_t b) -> int& { return cap[a * nodes + b]; };
  for (Vertex v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? inf : 1;
    for (Vertex w : g.neighbors(v)) at(2 * v + 1, 2 * w) = inf;
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  std::vector<std::size_t> parent(nodes);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), kNone);
    parent[source] = source;
    std::queue<std::size_t> q;
    q.push(source);
    while (!q.empty() && parent[sink] == kNone) {
      std::size_t a = q.front();
      q.pop();
      for (std::size_t b = 0; b < nodes; ++b) {
        if (parent[b] == kNone && at(a, b) > 0) {
          parent[b] = a;
          q.push(b);
        }
      }
    }
    if (parent[sink] == kNone) break;
    for (std::size_t b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// Minimum size of a vertex cut; n - 1 for complete graphs (0 for n = 1).
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw DomainError("vertex connectivity of the null graph");
  std::size_t best = n - 1;
  for (Vertex s = 0; s < n && best > 0; ++s) {
    for (Vertex t = s + 1; t < n && best > 0; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, detail::local_connectivity(g, s, t, best));
    }
  }
  return best;
}

}  // namespace hamcon
