#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamcon/graph.hpp"

namespace hamcon {

struct ClosureResult {
  Graph graph;
  std::vector<Edge> added_edges;  // in insertion order
};

/// Closure under "add uv when u, v are nonadjacent and d(u) + d(v) >= n + 1".
/// Neither endpoint may equal `protect` when given. Pairs are scanned in
/// lexicographic order and the scan restarts after every insertion.
inline ClosureResult hc_closure(const Graph& g, std::optional<Vertex> protect = std::nullopt) {
  const std::size_t n = g.order();
  if (n < 3) throw DomainError("hc_closure needs n >= 3");
  if (protect && *protect >= n) throw DomainError("protected vertex out of range");

  ClosureResult result{g, {}};
  Graph& h = result.graph;
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = h.degree(v);

  auto find_pair = [&]() -> std::optional<Edge> {
    for (Vertex u = 0; u < n; ++u) {
      if (protect == u) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (protect == v || h.has_edge(u, v)) continue;
        if (deg[u] + deg[v] >= n + 1) return Edge{u, v};
      }
    }
    return std::nullopt;
  };

  while (auto pair = find_pair()) {
    auto [u, v] = *pair;
    h.add_edge(u, v);
    ++deg[u];
    ++deg[v];
    result.added_edges.push_back(*pair);
  }
  return result;
}

struct DisintegrationTrace {
  struct Step {
    Vertex vertex;
    std::size_t degree;  // degree in the remaining graph when deleted
  };

  std::size_t t = 0;
  std::vector<Step> deleted;
  std::vector<Vertex> core_vertices;  // ascending, original labels
  Graph core;                         // induced on core_vertices, relabeled
};

/// Deletes vertices of degree <= t one at a time until none is left; the
/// survivors form the (t+1)-core. The lowest-index eligible vertex goes first,
/// except that `first_deleted` (which must have degree <= t) leads.
inline DisintegrationTrace t_disintegration(const Graph& g, std::size_t t,
                                            std::optional<Vertex> first_deleted = std::nullopt) {
  const std::size_t n = g.order();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  DisintegrationTrace trace;
  trace.t = t;

  auto remove = [&](Vertex v) {
    trace.deleted.push_back({v, deg[v]});
    alive[v] = false;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) --deg[w];
    }
  };

  if (first_deleted) {
    const Vertex w = *first_deleted;
    if (w >= n) throw DomainError("first_deleted vertex out of range");
    if (deg[w] > t) {
      throw DomainError("first_deleted vertex " + std::to_string(w) + " has degree " +
                        std::to_string(deg[w]) + " > t = " + std::to_string(t));
    }
    remove(w);
  }

  for (bool progress = true; progress;) {
    progress = false;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && deg[v] <= t) {
        remove(v);
        progress = true;
        break;
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) trace.core_vertices.push_back(v);
  }
  trace.core = induced_subgraph(g, trace.core_vertices);
  return trace;
}

}  // namespace hamcon
