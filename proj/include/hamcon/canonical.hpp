#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hamcon/graph.hpp"
#include "hamcon/graph6.hpp"

namespace hamcon {

/// graph6 string of the lexicographically smallest relabeling of a graph.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Color refinement seeded with degrees: a vertex's next color is the rank of
// (color, sorted neighbor colors). Ranks depend only on isomorphism-invariant
// data, so cell order is canonical.
inline std::vector<std::size_t> refined_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == classes) return color;
    classes = sorted.size();
  }
}

}  // namespace detail

/// Brute force over every labeling that respects the refined color cells.
/// Isomorphic graphs map to equal forms.
inline CanonicalForm canonical_form(const Graph& g, std::size_t max_order = 10) {
  const std::size_t n = g.order();
  if (n > max_order) {
    throw CapacityError("canonical_form supports n <= " + std::to_string(max_order) + ", got " +
                        std::to_string(n));
  }
  if (n > 11) throw CapacityError("canonical_form key is limited to n <= 11");

  const auto color = detail::refined_colors(g);
  std::map<std::size_t, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);

  // order[p] is the vertex placed at position p; cells occupy consecutive blocks.
  std::vector<Vertex> order;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (auto& [c, members] : cells) {
    blocks.emplace_back(order.size(), order.size() + members.size());
    order.insert(order.end(), members.begin(), members.end());
  }

  // Upper-triangle bits in graph6 order, first bit most significant.
  auto key = [&]() {
    std::uint64_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) k = (k << 1) | (g.has_edge(order[i], order[j]) ? 1u : 0u);
    }
    return k;
  };

  std::uint64_t best = key();
  std::vector<Vertex> best_order = order;
  for (;;) {
    // Odometer over the per-cell permutations.
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
    const std::uint64_t k = key();
    if (k < best) {
      best = k;
      best_order = order;
    }
  }

  std::vector<Vertex> position(n);
  for (std::size_t p = 0; p < n; ++p) position[best_order[p]] = p;
  return {encode_graph6(relabel(g, position))};
}

}  // namespace hamcon
