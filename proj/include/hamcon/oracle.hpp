#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hamcon/graph.hpp"

namespace hamcon {

struct OracleOptions {
  static constexpr std::size_t kHardCap = 32;  // endpoint sets are 32-bit words

  std::size_t dp_cap = 24;
  std::size_t threads = 1;
  bool full_matrix = false;
};

struct HcReport {
  bool is_hc = false;
  std::optional<Edge> failing_pair;  // lexicographically first (u < v)
  std::optional<std::vector<std::vector<bool>>> pair_matrix;
};

/// Hamilton path DP. For a fixed start u the table maps every vertex set S
/// (containing u) to the set of vertices at which a path from u covering
/// exactly S can end. Sets are indexed over V - {u} to halve the table.
class HamiltonSolver {
 public:
  explicit HamiltonSolver(std::size_t dp_cap = 24) : cap_(dp_cap) {
    if (cap_ > OracleOptions::kHardCap) {
      throw CapacityError("dp cap " + std::to_string(cap_) + " exceeds hard limit " +
                          std::to_string(OracleOptions::kHardCap));
    }
  }

  void check(const Graph& g) const {
    if (g.order() > cap_) {
      throw CapacityError("graph order " + std::to_string(g.order()) + " exceeds DP cap " +
                          std::to_string(cap_));
    }
  }

  /// Bitset (over original labels) of v such that a Hamilton u-v path exists.
  std::uint64_t endpoints_from(const Graph& g, Vertex u) {
    check(g);
    const std::size_t n = g.order();
    if (u >= n) throw DomainError("start vertex out of range");
    if (n == 1) return 0;

    // Compressed labels: other vertex i < u keeps i, i > u becomes i - 1.
    const std::size_t m = n - 1;
    auto squeeze = [u](std::uint64_t mask) {
      const std::uint64_t low = mask & ((std::uint64_t{1} << u) - 1);
      const std::uint64_t high = mask >> (u + 1);
      return static_cast<std::uint32_t>(low | (high << u));
    };
    std::uint32_t cadj[OracleOptions::kHardCap];
    for (std::size_t i = 0; i < m; ++i) {
      const Vertex v = i < u ? i : i + 1;
      cadj[i] = squeeze(g.mask(v));
    }

    const std::size_t states = std::size_t{1} << m;
    table_.assign(states, 0);
    const std::uint32_t start_nbrs = squeeze(g.mask(u));
    for (std::uint32_t rest = start_nbrs; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      table_[bit] = bit;
    }
    const std::uint32_t full = static_cast<std::uint32_t>(states - 1);
    for (std::uint32_t set = 1; set < full; ++set) {
      const std::uint32_t ends = table_[set];
      if (ends == 0) continue;
      std::uint32_t reach = 0;
      for (std::uint32_t e = ends; e != 0; e &= e - 1) reach |= cadj[std::countr_zero(e)];
      for (std::uint32_t ext = reach & ~set & full; ext != 0; ext &= ext - 1) {
        const std::uint32_t bit = ext & (~ext + 1);
        table_[set | bit] |= bit;
      }
    }
    const std::uint64_t ends = table_[full];
    const std::uint64_t low = ends & ((std::uint64_t{1} << u) - 1);
    const std::uint64_t high = (ends >> u) << (u + 1);
    return low | high;
  }

 private:
  std::size_t cap_;
  std::vector<std::uint32_t> table_;
};

inline bool hamilton_path(const Graph& g, Vertex u, Vertex v, std::size_t dp_cap = 24) {
  if (g.order() < 2) throw DomainError("hamilton_path needs n >= 2");
  if (u == v) throw DomainError("hamilton_path needs distinct endpoints");
  if (v >= g.order()) throw DomainError("end vertex out of range");
  HamiltonSolver solver(dp_cap);
  return (solver.endpoints_from(g, u) >> v) & 1u;
}

inline bool hamilton_cycle(const Graph& g, std::size_t dp_cap = 24) {
  if (g.order() < 3) throw DomainError("hamilton_cycle needs n >= 3");
  HamiltonSolver solver(dp_cap);
  return (solver.endpoints_from(g, 0) & g.mask(0)) != 0;
}

/// Boolean form of `hamiltonian_connected` reusing a caller-owned solver; meant
/// for enumeration loops that issue millions of small queries.
inline bool is_hamiltonian_connected(const Graph& g, HamiltonSolver& solver) {
  const std::size_t n = g.order();
  if (n < 3) throw DomainError("hamiltonian_connected needs n >= 3");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (Vertex u = 0; u + 1 < n; ++u) {
    const std::uint64_t later = all & ~((std::uint64_t{2} << u) - 1);
    if ((solver.endpoints_from(g, u) & later) != later) return false;
  }
  return true;
}

/// Decides whether every pair of vertices is joined by a Hamilton path. One DP
/// sweep per start vertex; sweeps may run on several threads, and the reported
/// failing pair is the lexicographically first regardless of scheduling.
inline HcReport hamiltonian_connected(const Graph& g, const OracleOptions& opts = {}) {
  const std::size_t n = g.order();
  if (n < 3) throw DomainError("hamiltonian_connected needs n >= 3");
  HamiltonSolver(opts.dp_cap).check(g);

  HcReport report;
  std::vector<std::uint64_t> ends(n, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{n};
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  auto worker = [&] {
    HamiltonSolver solver(opts.dp_cap);
    for (;;) {
      const std::size_t u = next.fetch_add(1);
      if (u + 1 >= n) return;
      if (!opts.full_matrix && u > first_bad.load()) return;
      ends[u] = solver.endpoints_from(g, u);
      const std::uint64_t later = all & ~((std::uint64_t{2} << u) - 1);
      if ((ends[u] & later) != later) {
        std::size_t cur = first_bad.load();
        while (u < cur && !first_bad.compare_exchange_weak(cur, u)) {
        }
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.threads, n - 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const std::size_t bad = first_bad.load();
  report.is_hc = bad == n;
  if (!report.is_hc) {
    const std::uint64_t later = all & ~((std::uint64_t{2} << bad) - 1);
    const std::uint64_t missing = later & ~ends[bad];
    report.failing_pair = Edge{bad, static_cast<Vertex>(std::countr_zero(missing))};
  }
  if (opts.full_matrix) {
    std::vector<std::vector<bool>> matrix(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u + 1 < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const bool ok = (ends[u] >> v) & 1u;
        matrix[u][v] = ok;
        matrix[v][u] = ok;
      }
    }
    report.pair_matrix = std::move(matrix);
  }
  return report;
}

}  // namespace hamcon
