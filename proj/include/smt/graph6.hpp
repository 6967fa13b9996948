// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// graph6 codec (one graph per line). Each byte carries six bits plus 63.
/// Header N(n) is one byte for n <= 62 and 126 followed by three bytes for
/// n <= 258047. The body lists x(i,j) for j = 1..n-1, i = 0..j-1, most
/// significant bit first, zero padded to a multiple of six.

#pragma once

#include <smt/error.hpp>
#include <smt/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace smt {

inline constexpr std::size_t graph6_max_order = 258047;
inline constexpr std::string_view graph6_header = ">>graph6<<";

namespace detail {

inline int graph6_value(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos);
  return c - 63;
}

} // namespace detail

inline Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.substr(0, graph6_header.size()) == graph6_header) pos = graph6_header.size();
  if (pos >= text.size()) throw ParseError("missing graph6 size header", pos);

  std::size_t n = 0;
  if (static_cast<unsigned char>(text[pos]) == 126) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
      throw UnsupportedSizeError("graph6 eight-byte size header is not supported");
    if (pos + 4 > text.size()) throw ParseError("truncated graph6 size header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(detail::graph6_value(text, pos + i));
    if (n <= 62) throw ParseError("non-canonical graph6 size header", pos);
    pos += 4;
  } else {
    n = static_cast<std::size_t>(detail::graph6_value(text, pos));
    pos += 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("truncated graph6 body", text.size());
  if (text.size() > pos + body) throw ParseError("trailing data after graph6 body", pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = detail::graph6_value(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + k / 6;
    const int chunk = detail::graph6_value(text, last);
    if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", last);
  }
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order) throw UnsupportedSizeError("graph6 encoding limited to " + std::to_string(graph6_max_order) + " vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

} // namespace smt
