#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "hamcon/bounds.hpp"
#include "hamcon/connectivity.hpp"
#include "hamcon/graph.hpp"

// One-sided tests. HC_CERTIFIED and NHC_CERTIFIED are claims backed by a
// witness that `recheck` can verify; INCONCLUSIVE claims nothing.

namespace hamcon {

enum class Outcome { kHcCertified, kNhcCertified, kInconclusive };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kHcCertified: return "HC_CERTIFIED";
    case Outcome::kNhcCertified: return "NHC_CERTIFIED";
    case Outcome::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// Degree-sum condition. On failure, the first nonadjacent pair with sum <= n.
struct OreWitness {
  std::optional<Edge> violating_pair;
};

/// Degree-sequence condition. On failure, the smallest index i with
/// d_{i-1} <= i and d_{n-i} <= n - i.
struct LickWitness {
  std::optional<std::size_t> index;
};

struct SizeWitness {
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  bool half_degree_clause = false;  // 2 delta >= n + 1
  std::optional<BigInt> phi;        // phi(n, delta) when 3 <= delta <= n/2
};

struct SeparatorWitness {
  std::vector<Vertex> set;
  std::size_t components = 0;
};

struct Verdict {
  Outcome outcome = Outcome::kInconclusive;
  std::variant<OreWitness, LickWitness, SizeWitness, SeparatorWitness> witness;

  bool certified() const { return outcome != Outcome::kInconclusive; }
};

namespace detail {

inline void require_order3(const Graph& g, const char* name) {
  if (g.order() < 3) throw DomainError(std::string(name) + " needs n >= 3");
}

inline std::optional<Edge> first_low_sum_pair(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && deg[u] + deg[v] < n + 1) return Edge{u, v};
    }
  }
  return std::nullopt;
}

inline bool lick_index_holds(const DegreeSequence& d, std::size_t i) {
  const std::size_t n = d.size();
  return i >= 2 && 2 * i <= n && d.d(i - 1) <= i && d.d(n - i) <= n - i;
}

inline std::optional<std::size_t> first_lick_index(const DegreeSequence& d) {
  for (std::size_t i = 2; 2 * i <= d.size(); ++i) {
    if (lick_index_holds(d, i)) return i;
  }
  return std::nullopt;
}

}  // namespace detail

inline Verdict ore_test(const Graph& g) {
  detail::require_order3(g, "ore_test");
  auto pair = detail::first_low_sum_pair(g);
  return {pair ? Outcome::kInconclusive : Outcome::kHcCertified, OreWitness{pair}};
}

/// At n = 3 the index range is empty and the condition would hold vacuously for
/// every graph, the empty one included, so nothing is certified there.
inline Verdict lick_test(const Graph& g) {
  detail::require_order3(g, "lick_test");
  if (g.order() == 3) return {Outcome::kInconclusive, LickWitness{}};
  auto index = detail::first_lick_index(degree_sequence(g));
  return {index ? Outcome::kInconclusive : Outcome::kHcCertified, LickWitness{index}};
}

/// Certifies when e(G) > phi(n, delta(G)) or when delta(G) >= (n + 1) / 2.
inline Verdict size_test(const Graph& g) {
  SizeWitness w;
  w.edges = g.edge_count();
  const std::size_t n = g.order();
  if (n < 3) return {Outcome::kInconclusive, w};
  w.min_degree = min_degree(g);
  w.half_degree_clause = 2 * w.min_degree >= n + 1;
  if (w.min_degree >= 3 && 2 * w.min_degree <= n) {
    w.phi = phi(static_cast<std::int64_t>(n), static_cast<std::int64_t>(w.min_degree)).value;
  }
  const bool above = w.phi && BigInt(w.edges) > *w.phi;
  return {w.half_degree_clause || above ? Outcome::kHcCertified : Outcome::kInconclusive, w};
}

/// If G - S has at least |S| components, no Hamilton path joins two vertices of S.
inline Verdict separator_certificate(const Graph& g, std::span<const Vertex> set) {
  std::set<Vertex> unique(set.begin(), set.end());
  if (unique.size() != set.size()) throw DomainError("separator set has repeated vertices");
  for (Vertex v : set) {
    if (v >= g.order()) throw DomainError("separator vertex " + std::to_string(v) + " not in graph");
  }
  if (set.size() < 2) throw DomainError("separator set needs at least 2 vertices");
  SeparatorWitness w{{unique.begin(), unique.end()}, component_count_without(g, set)};
  const bool fires = w.components >= w.set.size();
  return {fires ? Outcome::kNhcCertified : Outcome::kInconclusive, std::move(w)};
}

/// Re-derives the verdict's claim from its witness on `g`.
inline bool recheck(const Graph& g, const Verdict& verdict) {
  const std::size_t n = g.order();
  return std::visit(
      [&](const auto& w) -> bool {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, OreWitness>) {
          if (verdict.outcome == Outcome::kHcCertified) return !detail::first_low_sum_pair(g);
          if (!w.violating_pair) return verdict.outcome == Outcome::kInconclusive;
          auto [u, v] = *w.violating_pair;
          return !g.has_edge(u, v) && g.degree(u) + g.degree(v) <= n;
        } else if constexpr (std::is_same_v<W, LickWitness>) {
          auto seq = degree_sequence(g);
          if (n == 3) return verdict.outcome == Outcome::kInconclusive && !w.index;
          if (verdict.outcome == Outcome::kHcCertified) return !detail::first_lick_index(seq);
          return w.index && detail::lick_index_holds(seq, *w.index);
        } else if constexpr (std::is_same_v<W, SizeWitness>) {
          if (verdict.outcome != Outcome::kHcCertified) return true;
          if (w.edges != g.edge_count() || w.min_degree != min_degree(g)) return false;
          if (2 * w.min_degree >= n + 1) return true;
          if (w.min_degree < 3 || 2 * w.min_degree > n) return false;
          auto bound = phi(static_cast<std::int64_t>(n), static_cast<std::int64_t>(w.min_degree));
          return BigInt(w.edges) > bound.value;
        } else {
          if (verdict.outcome != Outcome::kNhcCertified) return true;
          return w.set.size() >= 2 && component_count_without(g, w.set) >= w.set.size();
        }
      },
      verdict.witness);
}

}  // namespace hamcon
