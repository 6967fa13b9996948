// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Simple undirected graphs stored as symmetric bit rows, plus the basic
/// constructions (complement, join, disjoint union, vertex deletion) and the
/// standard generators.

#pragma once

#include <smt/error.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace smt {

using Vertex = std::size_t;

/// Fixed-universe bit set over {0..size-1}.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  /// Low `universe` bits of `mask` become the members.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i)
      if ((mask >> i) & 1U) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return size_; }

  bool contains(Vertex v) const noexcept { return v < size_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0; }
  void insert(Vertex v) {
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t intersection_count(const VertexSet& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    trim();
    return *this;
  }
  VertexSet operator~() const {
    VertexSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  /// Members in increasing order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Lowest 64 members as a mask (for small-graph kernels).
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  /// "{0,3,4}"
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (Vertex v : members()) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

private:
  void check(Vertex v) const {
    if (v >= size_) throw ParameterError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(size_));
  }
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built through
/// the constructors below; `add_edge` exists for builders.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const noexcept { return u < order() && rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex u) const { return rows_.at(u); }
  std::size_t degree(Vertex u) const { return rows_.at(u).count(); }

  void add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loop " + std::to_string(u) + " in a simple graph");
    if (rows_[u].contains(v)) return;
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edges_;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : rows_[u].members())
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order());
    for (Vertex u = 0; u < order(); ++u) d[u] = degree(u);
    return d;
  }

  bool is_regular() const {
    if (order() == 0) return true;
    const std::size_t d0 = degree(0);
    for (Vertex u = 1; u < order(); ++u)
      if (degree(u) != d0) return false;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
  std::vector<VertexSet> rows_;
  std::size_t edges_ = 0;
};

/// Minimum degree. Throws on the empty graph.
inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw DomainError("minimum degree of the empty graph");
  std::size_t best = g.degree(0);
  for (Vertex u = 1; u < g.order(); ++u) best = std::min(best, g.degree(u));
  return best;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) best = std::max(best, g.degree(u));
  return best;
}

inline Graph complement(const Graph& g) {
  Graph c(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

/// Vertices of g2 are shifted by |V(g1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t off = g1.order();
  Graph r(off + g2.order());
  for (auto [u, v] : g1.edges()) r.add_edge(u, v);
  for (auto [u, v] : g2.edges()) r.add_edge(u + off, v + off);
  return r;
}

inline Graph join(const Graph& g1, const Graph& g2) {
  Graph r = disjoint_union(g1, g2);
  const std::size_t off = g1.order();
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) r.add_edge(u, v + off);
  return r;
}

/// Induced subgraph on `keep`, relabelled in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const auto kept = keep.members();
  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = i;
  Graph r(kept.size());
  for (auto [u, v] : g.edges())
    if (index[u] < g.order() && index[v] < g.order()) r.add_edge(index[u], index[v]);
  return r;
}

/// G - S.
inline Graph delete_vertices(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ParameterError("vertex set universe does not match graph order");
  return induced_subgraph(g, ~s);
}

/// i(G - S): vertices outside S all of whose neighbours lie in S.
inline std::size_t isolated_after_deletion(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ParameterError("vertex set universe does not match graph order");
  std::size_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (s.contains(u)) continue;
    if (g.neighbors(u).count() == g.neighbors(u).intersection_count(s)) ++count;
  }
  return count;
}

// Generators.

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  if (n == 0) throw ParameterError("path needs at least one vertex");
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least three vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// K_{a,b}; the a-side is 0..a-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) { return join(empty_graph(a), empty_graph(b)); }

/// K_{1,leaves} with centre 0.
inline Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

inline Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);         // outer cycle
    g.add_edge(i, i + 5);               // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return g;
}

} // namespace smt
