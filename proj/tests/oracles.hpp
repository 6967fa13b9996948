// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

// Independent brute-force oracles used only by the tests. None of these call
// into the library routines they are compared against.

#pragma once

#include <smt/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace smt::oracle {

/// Largest independent set by trying all 2^n subsets.
inline std::size_t independence_by_enumeration(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (std::size_t u = 0; u < n && independent; ++u)
      for (std::size_t v = u + 1; v < n && independent; ++v)
        if (((s >> u) & 1U) && ((s >> v) & 1U) && g.has_edge(u, v)) independent = false;
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return best;
}

/// Shortest cycle by depth-first enumeration of simple cycles whose smallest
/// vertex is the start. 0 means acyclic.
inline std::size_t girth_by_cycle_enumeration(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t u, std::size_t len) {
    for (std::size_t w = start; w < n; ++w) {
      if (!g.has_edge(u, w)) continue;
      if (w == start && len >= 3) {
        if (best == 0 || len < best) best = len;
      } else if (!on_path[w] && w != start) {
        on_path[w] = true;
        dfs(start, w, len + 1);
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s, 1);
    on_path[s] = false;
  }
  return best;
}

/// Maximum total of a {0,1/2,1} edge weighting, by trying all 3^m weightings.
/// Returned as twice the value.
inline std::int64_t half_integral_optimum_by_enumeration(const Graph& g) {
  const auto edges = g.edges();
  std::vector<int> w(edges.size(), 0);
  std::int64_t best = 0;
  std::function<void(std::size_t, std::vector<int>&, std::int64_t)> rec = [&](std::size_t i, std::vector<int>& load, std::int64_t total) {
    if (i == edges.size()) {
      best = std::max(best, total);
      return;
    }
    for (int x = 0; x <= 2; ++x) {
      auto [u, v] = edges[i];
      if (load[u] + x > 2 || load[v] + x > 2) break;
      load[u] += x;
      load[v] += x;
      rec(i + 1, load, total + x);
      load[u] -= x;
      load[v] -= x;
    }
  };
  std::vector<int> load(g.order(), 0);
  rec(0, load, 0);
  return best;
}

/// Graph6 decoding written directly from the format description: expand every
/// body byte to six bits, then read x(i,j) in column order. Small n only.
inline Graph decode_graph6_bits(const std::string& s) {
  const std::size_t n = static_cast<std::size_t>(s[0] - 63);
  std::string bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1 ? '1' : '0');
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (bits.at(k++) == '1') g.add_edge(i, j);
  return g;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Connected random graph: a random spanning tree plus random extra edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g = random_graph(n, p, rng);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  return g;
}

} // namespace smt::oracle
