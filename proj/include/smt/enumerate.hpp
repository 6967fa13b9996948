// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Isomorph-free enumeration of small graphs, used to build exhaustive test
/// corpora. Canonical forms come from an individualization-refinement search
/// that keeps the lexicographically largest relabelled adjacency code; no
/// automorphism pruning, so it is meant for n around 10 or less.

#pragma once

#include <smt/error.hpp>
#include <smt/graph.hpp>
#include <smt/graph6.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace smt {

inline constexpr std::size_t enumeration_max_order = 10;

namespace detail {

using Cell = std::vector<Vertex>;
using OrderedPartition = std::vector<Cell>;

inline void refine(const Graph& g, OrderedPartition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter(g.order());
      for (Vertex v : cells[s]) splitter.insert(v);
      OrderedPartition next;
      next.reserve(cells.size());
      for (const Cell& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::size_t, Cell> by_count;
        for (Vertex v : cell) by_count[g.neighbors(v).intersection_count(splitter)].push_back(v);
        if (by_count.size() > 1) changed = true;
        for (auto& [count, part] : by_count) next.push_back(std::move(part));
      }
      cells = std::move(next);
    }
  }
}

class Canonizer {
public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  Graph run() {
    OrderedPartition cells{Cell{}};
    for (Vertex v = 0; v < g_.order(); ++v) cells[0].push_back(v);
    if (g_.order() > 0) search(std::move(cells));
    Graph out(g_.order());
    for (Vertex i = 0; i < best_order_.size(); ++i)
      for (Vertex j = i + 1; j < best_order_.size(); ++j)
        if (g_.has_edge(best_order_[i], best_order_[j])) out.add_edge(i, j);
    return out;
  }

private:
  void search(OrderedPartition cells) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> order;
      for (const Cell& c : cells) order.push_back(c[0]);
      std::vector<bool> code;
      code.reserve(order.size() * order.size() / 2);
      for (std::size_t j = 1; j < order.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) code.push_back(g_.has_edge(order[i], order[j]));
      if (best_order_.empty() || code > best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    const Cell cell = *target;
    for (Vertex v : cell) {
      OrderedPartition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != at) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back(Cell{v});
        Cell rest;
        for (Vertex w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  const Graph& g_;
  std::vector<bool> best_code_;
  std::vector<Vertex> best_order_;
};

} // namespace detail

/// Relabelling of g that is identical for all graphs isomorphic to g.
inline Graph canonical_form(const Graph& g) {
  if (g.order() > enumeration_max_order + 2)
    throw ResourceError("canonical form is limited to small graphs");
  return detail::Canonizer(g).run();
}

/// All graphs on n vertices up to isomorphism (connected ones only if
/// requested), sorted by graph6 string. Every connected graph on n vertices
/// has a non-cut vertex, so the connected case extends connected graphs only.
inline std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
  if (n > enumeration_max_order) throw ResourceError("enumeration is limited to " + std::to_string(enumeration_max_order) + " vertices");
  if (n == 0) return {Graph(0)};
  std::vector<Graph> level{Graph(1)};
  for (std::size_t order = 2; order <= n; ++order) {
    std::set<std::string> seen;
    const std::uint64_t first_subset = connected_only ? 1 : 0;
    for (const Graph& base : level) {
      for (std::uint64_t subset = first_subset; subset < (std::uint64_t{1} << (order - 1)); ++subset) {
        Graph ext(order);
        for (auto [u, v] : base.edges()) ext.add_edge(u, v);
        for (Vertex u = 0; u + 1 < order; ++u)
          if ((subset >> u) & 1U) ext.add_edge(u, order - 1);
        seen.insert(to_graph6(canonical_form(ext)));
      }
    }
    level.clear();
    for (const std::string& code : seen) level.push_back(from_graph6(code));
  }
  return level;
}

} // namespace smt
