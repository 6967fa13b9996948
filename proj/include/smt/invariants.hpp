// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Exact combinatorial invariants: connectivity, bipartition, girth and
/// independence number.

#pragma once

#include <smt/error.hpp>
#include <smt/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace smt {

/// Connected component index of every vertex, numbered in order of lowest member.
inline std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.order(), unset);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != unset) continue;
    std::deque<Vertex> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u).members())
        if (label[w] == unset) {
          label[w] = next;
          queue.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline std::size_t component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

/// Proper 2-colouring (0/1 per vertex, lowest vertex of each component gets 0),
/// or nullopt when an odd cycle exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u).members()) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Length of a shortest cycle; `acyclic()` for forests.
class GirthValue {
public:
  static GirthValue acyclic() { return GirthValue(); }
  static GirthValue of(std::size_t length) {
    if (length < 3) throw ParameterError("girth below 3");
    GirthValue g;
    g.length_ = length;
    return g;
  }

  bool is_acyclic() const noexcept { return length_ == 0; }
  std::size_t length() const {
    if (is_acyclic()) throw DomainError("acyclic graph has no finite girth");
    return length_;
  }

  /// Forests satisfy every lower bound on girth.
  bool at_least(std::size_t bound) const noexcept { return is_acyclic() || length_ >= bound; }

  std::string str() const { return is_acyclic() ? "acyclic" : std::to_string(length_); }

  friend bool operator==(const GirthValue&, const GirthValue&) = default;

private:
  std::size_t length_ = 0; // 0 encodes acyclic
};

/// Breadth-first search from every vertex; a non-tree edge (u,w) met from root
/// s closes a closed walk of length d(u)+d(w)+1 that contains a cycle no longer
/// than that, and the minimum over all roots is attained by a shortest cycle.
inline GirthValue girth(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::size_t best = unset;
  std::vector<std::size_t> dist(g.order());
  std::vector<Vertex> parent(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), unset);
    dist[s] = 0;
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u).members()) {
        if (dist[w] == unset) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == unset ? GirthValue::acyclic() : GirthValue::of(best);
}

struct IndependenceBudget {
  std::size_t max_vertices = 40;
  std::uint64_t max_nodes = 100'000'000;
};

namespace detail {

class MaxIndependentSet {
public:
  MaxIndependentSet(const Graph& g, const IndependenceBudget& budget) : budget_(budget) {
    adj_.resize(g.order());
    for (Vertex u = 0; u < g.order(); ++u) adj_[u] = g.neighbors(u).low_word();
  }

  std::size_t solve() {
    const std::uint64_t all = adj_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj_.size()) - 1;
    search(all, 0);
    return best_;
  }

private:
  // Greedy clique cover of `cand`: an independent set meets each clique at most once.
  std::size_t clique_cover_bound(std::uint64_t cand) const {
    std::size_t cliques = 0;
    while (cand != 0) {
      std::uint64_t pool = cand;
      std::uint64_t clique_common = ~std::uint64_t{0};
      while (pool != 0) {
        const int v = std::countr_zero(pool);
        pool &= pool - 1;
        if ((clique_common >> v) & 1U) {
          clique_common &= adj_[v];
          cand &= ~(std::uint64_t{1} << v);
          pool &= adj_[v];
        }
      }
      ++cliques;
    }
    return cliques;
  }

  void search(std::uint64_t cand, std::size_t size) {
    if (++nodes_ > budget_.max_nodes)
      throw ResourceError("independence number search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    // Vertices of degree <= 1 inside cand always extend some maximum independent set.
    bool reduced = true;
    while (reduced && cand != 0) {
      reduced = false;
      for (std::uint64_t pool = cand; pool != 0; pool &= pool - 1) {
        const int v = std::countr_zero(pool);
        if (((cand >> v) & 1U) == 0) continue;
        if (std::popcount(adj_[v] & cand) <= 1) {
          cand &= ~(adj_[v] | (std::uint64_t{1} << v));
          ++size;
          reduced = true;
        }
      }
    }
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(cand) <= best_) return;

    int pivot = -1;
    int pivot_degree = -1;
    for (std::uint64_t pool = cand; pool != 0; pool &= pool - 1) {
      const int v = std::countr_zero(pool);
      const int d = std::popcount(adj_[v] & cand);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pivot;
    search(cand & ~(adj_[pivot] | bit), size + 1);
    search(cand & ~bit, size);
  }

  IndependenceBudget budget_;
  std::vector<std::uint64_t> adj_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Exact independence number by branch and bound. Throws ResourceError when the
/// graph or the search exceeds `budget`; never returns an estimate.
inline std::size_t independence_number(const Graph& g, const IndependenceBudget& budget = {}) {
  if (g.order() > budget.max_vertices || g.order() > 64)
    throw ResourceError("independence number: " + std::to_string(g.order()) + " vertices exceeds budget of " +
                        std::to_string(budget.max_vertices));
  return detail::MaxIndependentSet(g, budget).solve();
}

} // namespace smt
