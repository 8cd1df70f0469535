#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "hamcon/graph.hpp"

// graph6: N(n) header, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// packed big-endian into 6-bit groups, each group printed as value + 63.

namespace hamcon {

namespace detail {

inline constexpr int kGraph6Bias = 63;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63u) + kGraph6Bias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63u) + kGraph6Bias));
    }
  }
}

}  // namespace detail

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::append_size(out, n);
  unsigned group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + detail::kGraph6Bias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + detail::kGraph6Bias));
  }
  return out;
}

/// Parses one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted.
inline Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, detail::kGraph6Header.size()) == detail::kGraph6Header) {
    pos = detail::kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto take = [&](const char* what) -> unsigned {
    if (pos >= text.size()) throw ParseError(std::string("truncated ") + what, pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", pos);
    ++pos;
    return c - detail::kGraph6Bias;
  };

  std::size_t n = 0;
  unsigned first = take("header");
  if (first < 63) {
    n = first;
  } else {
    const std::size_t mark = pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take("header");
      if (n <= 258047) throw ParseError("non-canonical 36-bit order", mark);
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | take("header");
      if (n <= 62) throw ParseError("non-canonical 18-bit order", mark);
    }
  }
  if (n > Graph::kMaxVertices) {
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds capacity");
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  const std::size_t body = pos;
  if (text.size() - body != groups) {
    throw ParseError("expected " + std::to_string(groups) + " data bytes, found " +
                         std::to_string(text.size() - body),
                     text.size() - body < groups ? text.size() : body + groups);
  }

  Graph g(n);
  std::size_t k = 0;
  unsigned group = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) group = take("data");
      if ((group >> (5 - k % 6)) & 1u) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const unsigned padding = group & ((1u << (6 - k % 6)) - 1);
    if (padding != 0) throw ParseError("nonzero padding bits", pos - 1);
  }
  return g;
}

inline std::string export_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hamcon
