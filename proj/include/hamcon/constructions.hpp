#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamcon/graph.hpp"

namespace hamcon {

enum class Family {
  kF,         // K_d v (K_{n-2d+1} + complement of K_{d-1})
  kG,         // K_t v (K_{n-2t+1} + complement of K_{t-1}) minus t-d edges at one vertex
  kOreNhA,    // K_1 v (K_{n-2} + K_1)
  kOreNhB,    // K_2 v complement of K_3
  kOreNhcA,   // K_3 v complement of K_3
  kOreNhcB,   // K_2 v (K_{n-3} + K_1)
};

struct ConstructionSpec {
  Family family = Family::kF;
  std::size_t n = 0;
  std::size_t delta = 0;  // F and G only
};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::kF: return "F";
    case Family::kG: return "G";
    case Family::kOreNhA: return "ore-nh-a";
    case Family::kOreNhB: return "ore-nh-b";
    case Family::kOreNhcA: return "ore-nhc-a";
    case Family::kOreNhcB: return "ore-nhc-b";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::kF, Family::kG, Family::kOreNhA, Family::kOreNhB, Family::kOreNhcA,
                   Family::kOreNhcB}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

namespace detail {

inline void require_hub_range(std::size_t n, std::size_t delta, const char* name) {
  if (delta < 3) {
    throw RangeError(std::string(name) + "(" + std::to_string(n) + "," + std::to_string(delta) +
                     "): violates delta >= 3");
  }
  if (delta > n / 2) {
    throw RangeError(std::string(name) + "(" + std::to_string(n) + "," + std::to_string(delta) +
                     "): violates delta <= floor(n/2)");
  }
}

// K_hub v (K_{n-2hub+1} + complement of K_{hub-1}), blocks labeled in that order.
inline Graph hub_graph(std::size_t n, std::size_t hub) {
  return join(complete(hub), disjoint_union(complete(n - 2 * hub + 1), empty_graph(hub - 1)));
}

}  // namespace detail

/// Hub 0..delta-1, clique delta..n-delta, independent tail of delta-1 vertices.
inline Graph build_F(std::size_t n, std::size_t delta) {
  detail::require_hub_range(n, delta, "F");
  return detail::hub_graph(n, delta);
}

/// Hub 0..t-1 with t = floor(n/2); vertex n-1 loses its edges to hub vertices
/// 0..t-delta-1.
inline Graph build_G(std::size_t n, std::size_t delta) {
  detail::require_hub_range(n, delta, "G");
  const std::size_t t = n / 2;
  Graph g = detail::hub_graph(n, t);
  for (Vertex h = 0; h < t - delta; ++h) g.remove_edge(h, n - 1);
  return g;
}

inline Graph build_classical(const ConstructionSpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::kF: return build_F(n, spec.delta);
    case Family::kG: return build_G(n, spec.delta);
    case Family::kOreNhA:
      if (n < 3) throw RangeError("ore-nh-a: violates n >= 3");
      return join(complete(1), disjoint_union(complete(n - 2), complete(1)));
    case Family::kOreNhB:
      if (n != 5) throw RangeError("ore-nh-b: order is fixed at n = 5");
      return join(complete(2), empty_graph(3));
    case Family::kOreNhcA:
      if (n != 6) throw RangeError("ore-nhc-a: order is fixed at n = 6");
      return join(complete(3), empty_graph(3));
    case Family::kOreNhcB:
      if (n < 4) throw RangeError("ore-nhc-b: violates n >= 4");
      return join(complete(2), disjoint_union(complete(n - 3), complete(1)));
  }
  throw RangeError("unknown family");
}

/// Hub vertex set whose removal leaves |hub| components (F and G only).
inline std::vector<Vertex> hub_vertices(const ConstructionSpec& spec) {
  std::size_t size = 0;
  switch (spec.family) {
    case Family::kF:
      detail::require_hub_range(spec.n, spec.delta, "F");
      size = spec.delta;
      break;
    case Family::kG:
      detail::require_hub_range(spec.n, spec.delta, "G");
      size = spec.n / 2;
      break;
    default:
      throw DomainError("hub_vertices is defined for F and G only");
  }
  std::vector<Vertex> hub(size);
  for (std::size_t i = 0; i < size; ++i) hub[i] = i;
  return hub;
}

}  // namespace hamcon
