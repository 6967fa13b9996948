// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Fractional matching number, two ways:
///
///  - exhaustively from the deficiency formula
///      a'_*(G) = (n - max_S (i(G - S) - |S|)) / 2,
///  - in polynomial time as half the maximum matching of the bipartite
///    double cover, which also yields a {0, 1/2, 1}-valued optimum.
///
/// Everything here is integer arithmetic; fractional values are carried as
/// twice their value.

#pragma once

#include <smt/error.hpp>
#include <smt/graph.hpp>
#include <smt/invariants.hpp>
#include <smt/rational.hpp>

#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace smt {

struct DeficiencyWitness {
  VertexSet set;
  std::size_t isolated = 0;   // i(G - S)
  std::int64_t deficiency = 0; // i(G - S) - |S|
};

inline constexpr std::size_t deficiency_oracle_max_order = 22;

/// Maximizes i(G - S) - |S| over all 2^n subsets. Ties go to the smallest |S|,
/// then to the numerically smallest bitmask.
inline DeficiencyWitness deficiency_oracle(const Graph& g) {
  const std::size_t n = g.order();
  if (n > deficiency_oracle_max_order)
    throw ResourceError("deficiency oracle limited to " + std::to_string(deficiency_oracle_max_order) + " vertices");
  std::vector<std::uint32_t> adj(n);
  for (Vertex u = 0; u < n; ++u) adj[u] = static_cast<std::uint32_t>(g.neighbors(u).low_word());

  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  int best_size = 0;
  std::uint32_t best_mask = 0;
  std::size_t best_isolated = 0;
  const std::uint32_t end = n == 32 ? 0 : (std::uint32_t{1} << n);
  for (std::uint32_t s = 0; s < end; ++s) {
    std::size_t isolated = 0;
    for (Vertex u = 0; u < n; ++u)
      if (((s >> u) & 1U) == 0 && (adj[u] & ~s) == 0) ++isolated;
    const int size = std::popcount(s);
    const std::int64_t d = static_cast<std::int64_t>(isolated) - size;
    if (d > best || (d == best && size < best_size)) {
      best = d;
      best_size = size;
      best_mask = s;
      best_isolated = isolated;
    }
  }
  return DeficiencyWitness{VertexSet::from_mask(n, best_mask), best_isolated, best};
}

/// Vertices u (for u+) and n + u (for u-); each edge uv gives u+v- and v+u-.
inline Graph bipartite_double_cover(const Graph& g) {
  const std::size_t n = g.order();
  Graph cover(2 * n);
  for (auto [u, v] : g.edges()) {
    cover.add_edge(u, n + v);
    cover.add_edge(v, n + u);
  }
  return cover;
}

struct BipartiteMatching {
  std::size_t size = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs; // (side A vertex, other side vertex)
};

namespace detail {

/// Hopcroft-Karp over left vertices `left` and right vertices `right`.
class HopcroftKarp {
public:
  HopcroftKarp(const Graph& g, std::vector<Vertex> left, std::vector<Vertex> right)
      : g_(g), left_(std::move(left)), right_(std::move(right)), right_index_(g.order(), none) {
    for (std::size_t i = 0; i < right_.size(); ++i) right_index_[right_[i]] = i;
    adj_.resize(left_.size());
    for (std::size_t i = 0; i < left_.size(); ++i)
      for (Vertex w : g_.neighbors(left_[i]).members()) adj_[i].push_back(right_index_[w]);
    mate_left_.assign(left_.size(), none);
    mate_right_.assign(right_.size(), none);
    dist_.assign(left_.size(), 0);
  }

  BipartiteMatching run() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t u = 0; u < left_.size(); ++u)
        if (mate_left_[u] == none && dfs(u)) ++size;
    BipartiteMatching out;
    out.size = size;
    for (std::size_t u = 0; u < left_.size(); ++u)
      if (mate_left_[u] != none) out.pairs.emplace_back(left_[u], right_[mate_left_[u]]);
    return out;
  }

private:
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < left_.size(); ++u) {
      if (mate_left_[u] == none) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = none;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj_[u]) {
        const std::size_t next = mate_right_[w];
        if (next == none) {
          found = true;
        } else if (dist_[next] == none) {
          dist_[next] = dist_[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t w : adj_[u]) {
      const std::size_t next = mate_right_[w];
      if (next == none || (dist_[next] == dist_[u] + 1 && dfs(next))) {
        mate_left_[u] = w;
        mate_right_[w] = u;
        return true;
      }
    }
    dist_[u] = none;
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> left_, right_;
  std::vector<std::size_t> right_index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_left_, mate_right_, dist_;
};

} // namespace detail

/// Maximum matching of a bipartite graph whose parts are `side_a` and its
/// complement. Throws DomainError for non-bipartite input or a side that is
/// not one half of a bipartition.
inline BipartiteMatching bipartite_max_matching(const Graph& g, const VertexSet& side_a) {
  if (side_a.universe() != g.order()) throw ParameterError("side set universe does not match graph order");
  if (!is_bipartite(g)) throw DomainError("graph is not bipartite (odd cycle)");
  for (auto [u, v] : g.edges())
    if (side_a.contains(u) == side_a.contains(v))
      throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) + " does not cross the given sides");
  std::vector<Vertex> left, right;
  for (Vertex u = 0; u < g.order(); ++u) (side_a.contains(u) ? left : right).push_back(u);
  return detail::HopcroftKarp(g, std::move(left), std::move(right)).run();
}

/// Sides taken from the canonical 2-colouring (colour 0 is side A).
inline BipartiteMatching bipartite_max_matching(const Graph& g) {
  const auto colors = two_coloring(g);
  if (!colors) throw DomainError("graph is not bipartite (odd cycle)");
  VertexSet side(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    if ((*colors)[u] == 0) side.insert(u);
  return bipartite_max_matching(g, side);
}

namespace detail {

inline BipartiteMatching cover_matching(const Graph& g) {
  VertexSet plus(2 * g.order());
  for (Vertex u = 0; u < g.order(); ++u) plus.insert(u);
  return bipartite_max_matching(bipartite_double_cover(g), plus);
}

} // namespace detail

inline HalfInteger fractional_matching_number(const Graph& g) {
  return HalfInteger::from_twice(static_cast<std::int64_t>(detail::cover_matching(g).size));
}

inline bool has_fractional_perfect_matching(const Graph& g) {
  return fractional_matching_number(g).twice() == static_cast<std::int64_t>(g.order());
}

/// Edge weights in {0, 1/2, 1}, stored as twice the weight. Edges with weight
/// zero are omitted.
struct HalfIntegralMatching {
  std::map<std::pair<Vertex, Vertex>, int> twice_weight; // key (u, v) with u < v
  std::int64_t twice_total = 0;

  HalfInteger total() const { return HalfInteger::from_twice(twice_total); }

  /// One "u v numerator/2" line per edge of positive weight.
  std::string to_lines() const {
    std::string out;
    for (const auto& [edge, w] : twice_weight)
      out += std::to_string(edge.first) + " " + std::to_string(edge.second) + " " + std::to_string(w) + "/2\n";
    return out;
  }
};

/// Folds a maximum matching of the double cover: uv gets
/// (matched(u+v-) + matched(v+u-)) / 2.
inline HalfIntegralMatching half_integral_certificate(const Graph& g) {
  const std::size_t n = g.order();
  HalfIntegralMatching f;
  for (auto [plus, minus] : detail::cover_matching(g).pairs) {
    Vertex u = plus;
    Vertex v = minus - n;
    if (u > v) std::swap(u, v);
    f.twice_weight[{u, v}] += 1;
    f.twice_total += 1;
  }
  return f;
}

/// Every weighted pair is an edge, weights lie in {1/2, 1}, each vertex sum is
/// at most 1, and the stored total matches.
inline bool is_feasible(const Graph& g, const HalfIntegralMatching& f) {
  std::vector<int> load(g.order(), 0);
  std::int64_t total = 0;
  for (const auto& [edge, w] : f.twice_weight) {
    if (!g.has_edge(edge.first, edge.second) || edge.first >= edge.second) return false;
    if (w < 1 || w > 2) return false;
    load[edge.first] += w;
    load[edge.second] += w;
    total += w;
  }
  for (int l : load)
    if (l > 2) return false;
  return total == f.twice_total;
}

} // namespace smt
