// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// The extremal family H(delta, k): connected bipartite graphs with parts
/// V1, V2 where every V1 vertex has degree delta, |V1| = |V2| + k and all V2
/// vertices share one degree. Also the join graphs H1 v H2 (an independent
/// set of delta + 1 vertices joined to any graph on delta vertices) that lack
/// a fractional perfect matching although their complement has small q1.

#pragma once

#include <smt/error.hpp>
#include <smt/graph.hpp>
#include <smt/invariants.hpp>
#include <smt/rational.hpp>
#include <smt/spectral.hpp>

#include <cmath>
#include <optional>
#include <string>

namespace smt {

struct FamilyParams {
  std::size_t delta = 1; // degree of every V1 vertex
  std::size_t k = 1;     // |V1| - |V2|
  std::size_t m = 1;     // |V2|

  std::size_t order() const noexcept { return 2 * m + k; }

  /// Degree shared by the V2 vertices; requires validate() to pass.
  std::size_t v2_degree() const noexcept { return delta * (m + k) / m; }

  void validate() const {
    if (delta < 1 || k < 1 || m < 1) throw ParameterError("family parameters delta, k, m must all be at least 1");
    if (delta > m) throw ParameterError("delta = " + std::to_string(delta) + " exceeds |V2| = " + std::to_string(m));
    if ((delta * (m + k)) % m != 0)
      throw ParameterError("|V2| = " + std::to_string(m) + " does not divide delta*(m+k) = " + std::to_string(delta * (m + k)));
    if (v2_degree() > m + k) throw ParameterError("V2 degree exceeds |V1|");
  }
};

struct MembershipDiagnosis {
  bool member = false;
  std::string reason;         // first failed condition, or "member"
  std::optional<VertexSet> v1; // the V1 side when member
};

/// Tries both orientations of the (unique, since connected) bipartition.
inline MembershipDiagnosis is_member_H(const Graph& g, std::size_t delta, std::size_t k) {
  if (g.order() == 0) return {false, "empty graph", std::nullopt};
  if (!is_connected(g)) return {false, "not connected", std::nullopt};
  const auto colors = two_coloring(g);
  if (!colors) return {false, "not bipartite", std::nullopt};

  MembershipDiagnosis best{false, "", std::nullopt};
  int best_progress = -1;
  for (int side : {0, 1}) {
    VertexSet v1(g.order());
    std::size_t n1 = 0;
    for (Vertex u = 0; u < g.order(); ++u)
      if ((*colors)[u] == side) {
        v1.insert(u);
        ++n1;
      }
    const std::size_t n2 = g.order() - n1;

    int progress = 0;
    std::string reason;
    bool ok = true;
    for (Vertex u : v1.members())
      if (g.degree(u) != delta) ok = false;
    if (!ok) {
      reason = "V1 degrees are not all " + std::to_string(delta);
    } else {
      ++progress;
      if (n1 != n2 + k) {
        ok = false;
        reason = "|V1| - |V2| = " + std::to_string(static_cast<long long>(n1) - static_cast<long long>(n2)) + " != " + std::to_string(k);
      } else {
        ++progress;
        std::optional<std::size_t> d2;
        for (Vertex u = 0; u < g.order(); ++u) {
          if (v1.contains(u)) continue;
          if (!d2) d2 = g.degree(u);
          else if (*d2 != g.degree(u)) ok = false;
        }
        if (!ok) reason = "V2 degrees are not all equal";
        else ++progress;
      }
    }
    if (ok) return {true, "member", v1};
    if (progress > best_progress) {
      best_progress = progress;
      best.reason = reason;
    }
  }
  return best;
}

/// Canonical member: V1 = {0..m+k-1}, V2 = {m+k..2m+k-1}, and V1 vertex i is
/// joined to V2 vertices (i*delta + j) mod m for j < delta. The result is
/// checked against the membership conditions before it is returned.
inline Graph construct_H(const FamilyParams& p) {
  if (p.delta >= 1 && p.k >= 1 && p.m >= 1 && p.delta * (p.m + p.k) + 1 < p.order())
    throw NotConstructibleError("H(" + std::to_string(p.delta) + "," + std::to_string(p.k) + ") with |V2| = " +
                                std::to_string(p.m) + ": " + std::to_string(p.delta * (p.m + p.k)) + " edges on " +
                                std::to_string(p.order()) + " vertices, every such graph is disconnected");
  p.validate();
  const std::size_t n1 = p.m + p.k;
  Graph g(p.order());
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < p.delta; ++j) g.add_edge(i, n1 + (i * p.delta + j) % p.m);
  if (!is_connected(g))
    throw NotConstructibleError("H(" + std::to_string(p.delta) + "," + std::to_string(p.k) + ") with |V2| = " +
                                std::to_string(p.m) + ": construction is disconnected");
  const auto diag = is_member_H(g, p.delta, p.k);
  if (!diag.member) throw NotConstructibleError("construction is not a member: " + diag.reason);
  return g;
}

/// (V1, V2) blocks of the canonical member.
inline Partition family_partition(const FamilyParams& p) {
  std::vector<std::size_t> v1, v2;
  for (std::size_t i = 0; i < p.m + p.k; ++i) v1.push_back(i);
  for (std::size_t i = p.m + p.k; i < p.order(); ++i) v2.push_back(i);
  return Partition{v1, v2};
}

/// 2 delta n / (n - k).
inline Rational predicted_q1(std::size_t delta, std::size_t k, std::size_t n) {
  if (n <= k) throw ParameterError("predicted q1 needs n > k");
  return Rational(static_cast<std::int64_t>(2 * delta * n), static_cast<std::int64_t>(n - k));
}

/// delta * sqrt(1 + 2k / (n - k)).
inline double predicted_lambda1(std::size_t delta, std::size_t k, std::size_t n) {
  if (n <= k) throw ParameterError("predicted lambda1 needs n > k");
  const double ratio = 2.0 * static_cast<double>(k) / static_cast<double>(n - k);
  return static_cast<double>(delta) * std::sqrt(1.0 + ratio);
}

/// Independent set on delta + 1 vertices (labels 0..delta) joined to h2.
inline Graph construct_exception(std::size_t delta, const Graph& h2) {
  if (h2.order() != delta)
    throw ParameterError("H2 must have exactly delta = " + std::to_string(delta) + " vertices, got " + std::to_string(h2.order()));
  return join(empty_graph(delta + 1), h2);
}

/// The independent side A of an exception split, if one exists: |A| = delta+1,
/// |V \ A| = delta, and every A vertex is adjacent to exactly V \ A.
inline std::optional<VertexSet> find_exception_split(const Graph& g, std::size_t delta) {
  if (g.order() != 2 * delta + 1) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != delta) continue;
    const VertexSet& rest = g.neighbors(v);
    const VertexSet a = ~rest;
    if (a.count() != delta + 1) continue;
    bool ok = true;
    for (Vertex u : a.members())
      if (!(g.neighbors(u) == rest)) ok = false;
    if (ok) return a;
  }
  return std::nullopt;
}

inline bool is_exception_graph(const Graph& g, std::size_t delta) { return find_exception_split(g, delta).has_value(); }

} // namespace smt
