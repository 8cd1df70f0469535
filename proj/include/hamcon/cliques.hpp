#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hamcon/binomial.hpp"
#include "hamcon/graph.hpp"

namespace hamcon {

/// N_s(G): number of s-vertex cliques.
struct CliqueCount {
  std::size_t s = 0;
  std::uint64_t count = 0;
};

namespace detail {

struct PascalTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  constexpr PascalTable() {
    for (std::size_t n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
  }
};
inline constexpr PascalTable kPascal{};

/// Vertices in degeneracy order: repeatedly remove a minimum-degree vertex,
/// lowest index first on ties.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<Vertex> order;
  order.reserve(n);
  while (alive != 0) {
    Vertex best = 64;
    int best_deg = 65;
    for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(rest));
      int d = std::popcount(g.mask(v) & alive);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    }
    order.push_back(best);
    alive &= ~(std::uint64_t{1} << best);
  }
  return order;
}

// Pivoting clique counter over single-word candidate sets. Every root-to-leaf
// path carries `held` vertices that must be in the clique and `pivots` that may
// or may not be; each s-clique is counted at exactly one leaf.
class PivotCounter {
 public:
  PivotCounter(const Graph& g, std::size_t s) : s_(s) {
    for (Vertex v = 0; v < g.order(); ++v) adj_[v] = g.mask(v);
  }

  std::uint64_t run(std::uint64_t candidates, std::size_t held, std::size_t pivots) {
    if (held > s_) return 0;
    if (held + pivots + static_cast<std::size_t>(std::popcount(candidates)) < s_) return 0;
    if (candidates == 0) return kPascal.c[pivots][s_ - held];

    Vertex pivot = 0;
    int best = -1;
    for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
      auto u = static_cast<Vertex>(std::countr_zero(rest));
      int d = std::popcount(candidates & adj_[u]);
      if (d > best) {
        best = d;
        pivot = u;
      }
    }
    const std::uint64_t pivot_bit = std::uint64_t{1} << pivot;
    std::uint64_t total = run(candidates & adj_[pivot], held, pivots + 1);
    std::uint64_t remaining = candidates & ~pivot_bit;
    for (std::uint64_t rest = candidates & ~adj_[pivot] & ~pivot_bit; rest != 0; rest &= rest - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(rest));
      total += run(remaining & adj_[v], held + 1, pivots);
      remaining &= ~(std::uint64_t{1} << v);
    }
    return total;
  }

 private:
  std::size_t s_;
  std::array<std::uint64_t, 64> adj_{};
};

}  // namespace detail

/// Exact N_s(G). Requires n <= 64.
inline CliqueCount count_cliques(const Graph& g, std::size_t s) {
  if (s < 1) throw DomainError("clique size must be at least 1");
  if (g.order() > 64) throw CapacityError("clique counting supports n <= 64");
  CliqueCount result{s, 0};
  if (s > g.order()) return result;

  const auto order = detail::degeneracy_order(g);
  std::uint64_t later = 0;
  for (Vertex v : order) later |= std::uint64_t{1} << v;

  detail::PivotCounter counter(g, s);
  for (Vertex v : order) {
    later &= ~(std::uint64_t{1} << v);
    result.count += counter.run(g.mask(v) & later, 1, 0);
  }
  return result;
}

namespace detail {

inline void require_extremal_range(std::int64_t n, std::int64_t delta, std::int64_t s,
                                   const char* what) {
  if (delta < 3 || delta > n / 2) {
    throw RangeError(std::string(what) + ": need 3 <= delta <= floor(n/2), got n=" +
                     std::to_string(n) + ", delta=" + std::to_string(delta));
  }
  if (s < 2) throw RangeError(std::string(what) + ": need s >= 2, got " + std::to_string(s));
}

}  // namespace detail

/// Number of s-cliques in K_delta v (K_{n-2delta+1} + complement of K_{delta-1}).
inline BigInt f_s_formula(std::int64_t n, std::int64_t delta, std::int64_t s) {
  detail::require_extremal_range(n, delta, s, "f_s");
  return binomial(n - delta + 1, s) + (delta - 1) * binomial(delta, s - 1);
}

/// Number of s-cliques in the t-hub construction with t - delta hub edges removed
/// from one independent vertex, t = floor(n/2).
inline BigInt g_s_formula(std::int64_t n, std::int64_t delta, std::int64_t s) {
  detail::require_extremal_range(n, delta, s, "g_s");
  const std::int64_t t = n / 2;
  return binomial(n - t + 1, s) + (t - 2) * binomial(t, s - 1) + binomial(delta, s - 1);
}

/// (x - 2) C(x, s - 1) + C(n + 1 - x, s).
inline BigInt lambda_s(std::int64_t n, std::int64_t x, std::int64_t s) {
  if (x < 0 || x > n) {
    throw RangeError("lambda_s: need 0 <= x <= n, got n=" + std::to_string(n) +
                     ", x=" + std::to_string(x));
  }
  return (x - 2) * binomial(x, s - 1) + binomial(n + 1 - x, s);
}

}  // namespace hamcon
