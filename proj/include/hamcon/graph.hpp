#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamcon/error.hpp"

namespace hamcon {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1, stored as one bitset row per
/// vertex. Rows are split into 64-bit words; graphs with n <= 64 use a single
/// word per row and expose it through `mask()`.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 1u << 14;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits) {
    if (n > kMaxVertices) {
      throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                          std::to_string(kMaxVertices));
    }
    bits_.assign(n_ * words_, 0);
  }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1u;
  }

  /// Adds u-v. Loops and duplicate edges are rejected.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
      throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    set_bit(u, v);
    set_bit(v, u);
  }

  void remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) {
      throw DomainError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    clear_bit(u, v);
    clear_bit(v, u);
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    check_vertex(v);
    return {bits_.data() + v * words_, words_};
  }

  /// Single-word adjacency row; only valid for graphs with n <= 64.
  std::uint64_t mask(Vertex v) const {
    if (n_ > kWordBits) throw CapacityError("mask() requires n <= 64");
    check_vertex(v);
    return bits_[v];
  }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < words_; ++i) {
      for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
        out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
    return out;
  }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(n_));
    }
  }
  void set_bit(Vertex u, Vertex v) {
    bits_[u * words_ + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  }
  void clear_bit(Vertex u, Vertex v) {
    bits_[u * words_ + v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Nondecreasing vertex degrees d_1 <= ... <= d_n.
struct DegreeSequence {
  std::vector<std::size_t> degrees;

  std::size_t size() const noexcept { return degrees.size(); }
  /// 1-based access, matching the usual d_i notation.
  std::size_t d(std::size_t i) const { return degrees.at(i - 1); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

/// G + H. G keeps labels 0..|G|-1, H is shifted by |G|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t offset = g.order();
  if (offset + h.order() > Graph::kMaxVertices) {
    throw CapacityError("disjoint union exceeds graph capacity");
  }
  Graph out(offset + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + offset, v + offset);
  return out;
}

/// G v H: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

/// Subgraph induced by `keep`, relabeled 0..|keep|-1 in the order given.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
    }
  }
  return out;
}

/// G relabeled so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw DomainError("permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

inline std::size_t edge_count(const Graph& g) { return g.edge_count(); }

inline DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence seq;
  seq.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) seq.degrees.push_back(g.degree(v));
  std::sort(seq.degrees.begin(), seq.degrees.end());
  return seq;
}

inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw DomainError("minimum degree of the null graph");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

}  // namespace hamcon
