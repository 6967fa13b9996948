// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Classifying checkers for the bounds relating q1(G), the fractional matching
/// number and fractional perfect matchings.
///
/// A checker never returns a bare boolean. Each report carries the structural
/// precondition, an optional spectral hypothesis comparison, and a conclusion
/// (either a comparison or a yes/no fact), and its outcome is a pure function
/// of that evidence (see `derive_outcome`).
///
/// Comparisons between an eigenvalue and a rational threshold are settled by
/// the floating enclosure when it clears the threshold, and otherwise exactly
/// through `compare_eigenvalue_exact`. Only when neither works (order above
/// the exact limit, even after one retry at tol/100) is the outcome
/// Inconclusive.

#pragma once

#include <smt/error.hpp>
#include <smt/families.hpp>
#include <smt/graph.hpp>
#include <smt/graph6.hpp>
#include <smt/invariants.hpp>
#include <smt/matching.hpp>
#include <smt/rational.hpp>
#include <smt/spectral.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smt {

enum class TheoremId { T32, L31, L33, T34, C35, T41, T42, T43, T44, C45 };

inline constexpr std::array<TheoremId, 10> all_theorems{TheoremId::T32, TheoremId::L31, TheoremId::L33, TheoremId::T34,
                                                        TheoremId::C35, TheoremId::T41, TheoremId::T42, TheoremId::T43,
                                                        TheoremId::T44, TheoremId::C45};

inline std::string_view theorem_code(TheoremId id) {
  switch (id) {
  case TheoremId::T32: return "t32";
  case TheoremId::L31: return "l31";
  case TheoremId::L33: return "l33";
  case TheoremId::T34: return "t34";
  case TheoremId::C35: return "c35";
  case TheoremId::T41: return "t41";
  case TheoremId::T42: return "t42";
  case TheoremId::T43: return "t43";
  case TheoremId::T44: return "t44";
  case TheoremId::C45: return "c45";
  }
  return "?";
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view code) {
  for (TheoremId id : all_theorems)
    if (theorem_code(id) == code) return id;
  return std::nullopt;
}

enum class CheckOutcome { HypothesisNotMet, HoldsStrict, HoldsWithEquality, Violated, Inconclusive };

inline std::string_view outcome_name(CheckOutcome o) {
  switch (o) {
  case CheckOutcome::HypothesisNotMet: return "HypothesisNotMet";
  case CheckOutcome::HoldsStrict: return "HoldsStrict";
  case CheckOutcome::HoldsWithEquality: return "HoldsWithEquality";
  case CheckOutcome::Violated: return "Violated";
  case CheckOutcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// Either an exact rational or a floating interval.
struct Quantity {
  std::optional<Rational> exact;
  double lo = 0.0;
  double hi = 0.0;

  static Quantity of(const Rational& r) { return Quantity{r, r.to_double(), r.to_double()}; }
  static Quantity of(const HalfInteger& h) { return of(h.rational()); }
  static Quantity interval(double lo, double hi) { return Quantity{std::nullopt, lo, hi}; }
  static Quantity of(const EigenEnclosure& e) { return interval(e.lo, e.hi); }

  /// "p/q" for exact values, "midpoint±radius" for intervals.
  std::string str() const {
    if (exact) return exact->str();
    // Only digits the radius leaves meaningful, at most nine.
    const double radius = (hi - lo) / 2;
    int digits = 9;
    if (radius > 0.0) digits = std::clamp(-static_cast<int>(std::floor(std::log10(radius))) - 1, 0, 9);
    double mid = lo + (hi - lo) / 2;
    if (mid == 0.0) mid = 0.0; // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f±%.1e", digits, mid, radius);
    return buf;
  }
};

/// The relation the statement asserts between lhs and rhs.
enum class Relation { Less, LessEqual, Greater, GreaterEqual };

inline std::string_view relation_symbol(Relation r) {
  switch (r) {
  case Relation::Less: return "<";
  case Relation::LessEqual: return "<=";
  case Relation::Greater: return ">";
  case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

enum class DecidedBy { Enclosure, Exact, Undecided };

struct Comparison {
  Quantity lhs;
  Relation rel = Relation::LessEqual;
  Quantity rhs;
  std::optional<int> sign; // sign(lhs - rhs) once decided
  DecidedBy decided_by = DecidedBy::Undecided;

  bool decided() const noexcept { return sign.has_value(); }
  bool holds() const {
    switch (rel) {
    case Relation::Less: return *sign < 0;
    case Relation::LessEqual: return *sign <= 0;
    case Relation::Greater: return *sign > 0;
    case Relation::GreaterEqual: return *sign >= 0;
    }
    return false;
  }
};

/// Sign of (lhs - rhs) from the stored quantities alone, if they separate.
inline std::optional<int> sign_from_quantities(const Quantity& lhs, const Quantity& rhs) {
  if (lhs.exact && rhs.exact) {
    auto c = *lhs.exact <=> *rhs.exact;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (lhs.hi < rhs.lo) return -1;
  if (lhs.lo > rhs.hi) return 1;
  return std::nullopt;
}

struct TheoremReport {
  TheoremId id = TheoremId::T32;
  std::string graph6;
  CheckOutcome outcome = CheckOutcome::Inconclusive;
  bool structural_ok = true;
  std::string structural_note; // why the structural precondition failed
  std::optional<Comparison> hypothesis;
  std::optional<Comparison> conclusion;
  std::optional<bool> conclusion_flag; // for "then G has a fractional perfect matching"-type conclusions
  std::string witness;
  std::string diagnosis;

  /// The comparison shown in the lhs/rhs report columns.
  const Comparison* headline() const {
    if (conclusion) return &*conclusion;
    if (hypothesis) return &*hypothesis;
    return nullptr;
  }
};

/// Outcome as a function of the stored evidence.
inline CheckOutcome derive_outcome(const TheoremReport& r) {
  if (!r.structural_ok) return CheckOutcome::HypothesisNotMet;
  if (r.hypothesis) {
    if (!r.hypothesis->decided()) return CheckOutcome::Inconclusive;
    if (!r.hypothesis->holds()) return CheckOutcome::HypothesisNotMet;
  }
  if (r.conclusion) {
    if (!r.conclusion->decided()) return CheckOutcome::Inconclusive;
    if (*r.conclusion->sign == 0) {
      // Equality counts as holding with equality even where the statement is
      // strict; those rows are the boundary findings.
      return CheckOutcome::HoldsWithEquality;
    }
    return r.conclusion->holds() ? CheckOutcome::HoldsStrict : CheckOutcome::Violated;
  }
  if (r.conclusion_flag) return *r.conclusion_flag ? CheckOutcome::HoldsStrict : CheckOutcome::Violated;
  return CheckOutcome::Inconclusive;
}

/// Recomputes the outcome after re-deciding every enclosure-decided
/// comparison from its stored quantities. Exact decisions are taken as stored.
inline CheckOutcome reevaluate(TheoremReport r) {
  for (auto* c : {r.hypothesis ? &*r.hypothesis : nullptr, r.conclusion ? &*r.conclusion : nullptr}) {
    if (c == nullptr || c->decided_by != DecidedBy::Enclosure) continue;
    c->sign = sign_from_quantities(c->lhs, c->rhs);
  }
  return derive_outcome(r);
}

struct CheckOptions {
  double tol = default_tolerance;
  Rational threshold_k = Rational(1); // k for l31
  IndependenceBudget independence{};
};

/// Lazily computed per-graph quantities shared by the checkers. Not for
/// concurrent use; make one per graph per worker.
class GraphFacts {
public:
  GraphFacts(Graph g, CheckOptions options) : g_(std::move(g)), opt_(options) {}

  const Graph& graph() const noexcept { return g_; }
  const CheckOptions& options() const noexcept { return opt_; }
  std::size_t n() const noexcept { return g_.order(); }

  const std::string& graph6() {
    if (!graph6_) graph6_ = to_graph6(g_);
    return *graph6_;
  }
  bool connected() {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
  }
  std::size_t delta() { return min_degree(g_); }
  const HalfInteger& alpha_star() {
    if (!alpha_star_) alpha_star_ = fractional_matching_number(g_);
    return *alpha_star_;
  }
  bool fpm() { return alpha_star().twice() == static_cast<std::int64_t>(n()); }
  const GirthValue& girth_value() {
    if (!girth_) girth_ = girth(g_);
    return *girth_;
  }
  std::size_t alpha() {
    if (!alpha_) alpha_ = independence_number(g_, opt_.independence);
    return *alpha_;
  }
  const Graph& complement_graph() {
    if (!complement_) complement_ = complement(g_);
    return *complement_;
  }

  const SymmetricMatrix& signless() {
    if (!q_) q_ = build_matrix(g_, MatrixKind::SignlessLaplacian);
    return *q_;
  }
  const SymmetricMatrix& complement_signless() {
    if (!qc_) qc_ = build_matrix(complement_graph(), MatrixKind::SignlessLaplacian);
    return *qc_;
  }
  const SymmetricMatrix& adjacency() {
    if (!a_) a_ = build_matrix(g_, MatrixKind::Adjacency);
    return *a_;
  }
  const SymmetricMatrix& laplacian() {
    if (!l_) l_ = build_matrix(g_, MatrixKind::Laplacian);
    return *l_;
  }

private:
  Graph g_;
  CheckOptions opt_;
  std::optional<std::string> graph6_;
  std::optional<bool> connected_;
  std::optional<HalfInteger> alpha_star_;
  std::optional<GirthValue> girth_;
  std::optional<std::size_t> alpha_;
  std::optional<Graph> complement_;
  std::optional<SymmetricMatrix> q_, qc_, a_, l_;
};

namespace detail {

struct EigenDecision {
  EigenEnclosure enclosure;
  std::optional<int> sign; // sign(eigenvalue - x)
  DecidedBy by = DecidedBy::Undecided;
};

/// Locates the index-th largest eigenvalue of m relative to x.
inline EigenDecision decide_eigenvalue(const SymmetricMatrix& m, std::size_t index, const Rational& x, double tol) {
  EigenDecision d;
  for (double t : {tol, tol / 100}) {
    d.enclosure = eigenvalue(m, index, t);
    const double xv = x.to_double();
    if (d.enclosure.hi < xv) {
      d.sign = -1;
      d.by = DecidedBy::Enclosure;
      return d;
    }
    if (d.enclosure.lo > xv) {
      d.sign = 1;
      d.by = DecidedBy::Enclosure;
      return d;
    }
    if (m.order() <= exact_count_max_order && m.is_integral()) {
      const auto c = compare_eigenvalue_exact(m, index, x);
      d.sign = c < 0 ? -1 : (c > 0 ? 1 : 0);
      d.by = DecidedBy::Exact;
      return d;
    }
  }
  return d;
}

/// eigenvalue REL x, with the eigenvalue on the left.
inline Comparison eigen_vs_rational(const SymmetricMatrix& m, std::size_t index, Relation rel, const Rational& x, double tol) {
  const auto d = decide_eigenvalue(m, index, x, tol);
  return Comparison{Quantity::of(d.enclosure), rel, Quantity::of(x), d.sign, d.by};
}

inline TheoremReport start(TheoremId id, GraphFacts& f) {
  TheoremReport r;
  r.id = id;
  r.graph6 = f.graph6();
  return r;
}

inline TheoremReport finish(TheoremReport r) {
  r.outcome = derive_outcome(r);
  return r;
}

inline TheoremReport not_met(TheoremReport r, std::string note) {
  r.structural_ok = false;
  r.structural_note = std::move(note);
  return finish(std::move(r));
}

inline TheoremReport inconclusive(TheoremReport r, const std::string& why) {
  r.diagnosis = why;
  r.outcome = CheckOutcome::Inconclusive;
  return r;
}

inline std::string deficiency_text(const Graph& g) {
  if (g.order() > deficiency_oracle_max_order) return "";
  const auto w = deficiency_oracle(g);
  return "S=" + w.set.str() + " i(G-S)=" + std::to_string(w.isolated) + " deficiency=" + std::to_string(w.deficiency);
}

/// Shared tail of the "then G has a fractional perfect matching" statements.
inline TheoremReport conclude_fpm(TheoremReport r, GraphFacts& f) {
  r.conclusion_flag = f.fpm();
  if (!*r.conclusion_flag) r.witness += (r.witness.empty() ? "" : "; ") + deficiency_text(f.graph());
  r.diagnosis = "alpha_star=" + f.alpha_star().str();
  return finish(std::move(r));
}

inline std::string i64(std::size_t v) { return std::to_string(v); }

} // namespace detail

/// alpha'_*(G) >= n delta / q1(G) for connected G, n >= 2. At equality the
/// report says whether G lies in H(delta, z), z = n(q1 - 2 delta)/q1.
inline TheoremReport check_lower_bound(GraphFacts& f) {
  auto r = detail::start(TheoremId::T32, f);
  if (f.n() < 2) return detail::not_met(std::move(r), "needs n >= 2");
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  try {
    const auto n = static_cast<std::int64_t>(f.n());
    const auto delta = static_cast<std::int64_t>(f.delta());
    const Rational a = f.alpha_star().rational();
    // alpha >= n delta / q1  <=>  q1 >= n delta / alpha  (all positive)
    const Rational critical = Rational(n * delta) / a;
    const auto d = detail::decide_eigenvalue(f.signless(), 1, critical, f.options().tol);
    const double nd = static_cast<double>(n * delta);
    const double slack = 4 * std::numeric_limits<double>::epsilon();
    Comparison c{Quantity::of(a), Relation::GreaterEqual,
                 Quantity::interval(nd / d.enclosure.hi * (1 - slack), nd / std::max(d.enclosure.lo, 1e-300) * (1 + slack)),
                 d.sign, d.by};
    // The derived interval nd/q1 can lose the separation the q1 enclosure had.
    if (c.decided_by == DecidedBy::Enclosure && sign_from_quantities(c.lhs, c.rhs) != c.sign) {
      const auto exact = compare_eigenvalue_exact(f.signless(), 1, critical);
      c.sign = exact < 0 ? -1 : (exact > 0 ? 1 : 0);
      c.decided_by = DecidedBy::Exact;
    }
    r.conclusion = c;
    if (c.decided() && *c.sign == 0) {
      const std::int64_t z = n - a.num() * 2 / a.den(); // n - 2 alpha, an integer
      std::string diag = "equality; z=" + std::to_string(z) + " (integer)";
      bool member = false;
      if (z >= 0) {
        const auto m = is_member_H(f.graph(), static_cast<std::size_t>(delta), static_cast<std::size_t>(z));
        member = m.member;
        diag += "; H(" + std::to_string(delta) + "," + std::to_string(z) + ") member: " + (member ? "yes" : "no (" + m.reason + ")");
      }
      diag += (z >= 1 && member) ? "; matches characterization" : "; characterization gap";
      r.diagnosis = diag;
    }
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::finish(std::move(r));
}

/// If q1 < 2 n delta / (n - k) then alpha'_* > (n - k)/2, for 0 < k < n.
inline TheoremReport check_threshold(GraphFacts& f, const Rational& k) {
  const Rational n(static_cast<std::int64_t>(f.n()));
  if (!(k > Rational(0)) || !(k < n)) throw ParameterError("k must satisfy 0 < k < n, got k = " + k.str());
  auto r = detail::start(TheoremId::L31, f);
  r.witness = "k=" + k.str();
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  try {
    const Rational delta(static_cast<std::int64_t>(f.delta()));
    const Rational x = Rational(2) * n * delta / (n - k);
    r.hypothesis = detail::eigen_vs_rational(f.signless(), 1, Relation::Less, x, f.options().tol);
    if (r.hypothesis->decided() && r.hypothesis->holds()) {
      const Rational a = f.alpha_star().rational();
      const Rational bound = (n - k) / Rational(2);
      auto s = a <=> bound;
      r.conclusion = Comparison{Quantity::of(a), Relation::Greater, Quantity::of(bound), s < 0 ? -1 : (s > 0 ? 1 : 0),
                                DecidedBy::Exact};
    }
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::finish(std::move(r));
}

/// Uses the configured k; a k outside (0, n) for this graph is reported as an
/// unmet hypothesis rather than thrown, so corpus scans keep going.
inline TheoremReport check_threshold(GraphFacts& f) {
  const Rational& k = f.options().threshold_k;
  if (!(k > Rational(0)) || !(k < Rational(static_cast<std::int64_t>(f.n())))) {
    auto r = detail::start(TheoremId::L31, f);
    r.witness = "k=" + k.str();
    return detail::not_met(std::move(r), "k outside (0, n)");
  }
  return check_threshold(f, k);
}

/// q1 <= max over edges of d(u) + d(v), for connected G with an edge.
inline TheoremReport check_degree_sum(GraphFacts& f) {
  auto r = detail::start(TheoremId::L33, f);
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  const Graph& g = f.graph();
  if (g.size() == 0) return detail::not_met(std::move(r), "edgeless graph");
  std::size_t best = 0;
  std::pair<Vertex, Vertex> arg{0, 0};
  for (auto [u, v] : g.edges())
    if (g.degree(u) + g.degree(v) > best) {
      best = g.degree(u) + g.degree(v);
      arg = {u, v};
    }
  r.witness = "edge " + detail::i64(arg.first) + "-" + detail::i64(arg.second) + " degree sum " + detail::i64(best);
  try {
    r.conclusion = detail::eigen_vs_rational(f.signless(), 1, Relation::LessEqual,
                                             Rational(static_cast<std::int64_t>(best)), f.options().tol);
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  if (r.conclusion->decided() && *r.conclusion->sign == 0) {
    const auto colors = two_coloring(g);
    if (colors) {
      std::optional<std::size_t> d[2];
      bool semi = true;
      for (Vertex u = 0; u < g.order(); ++u) {
        auto& slot = d[(*colors)[u]];
        if (!slot) slot = g.degree(u);
        else if (*slot != g.degree(u)) semi = false;
      }
      if (semi && g.is_regular()) r.diagnosis = "equality; regular bipartite";
      else if (semi) r.diagnosis = "equality; semi-regular bipartite";
      else r.diagnosis = "equality; bipartite but not semi-regular (outside stated equality characterization)";
    } else if (g.is_regular()) {
      r.diagnosis = "equality; regular non-bipartite (outside stated equality characterization)";
    } else {
      r.diagnosis = "equality; non-bipartite non-regular (outside stated equality characterization)";
    }
  }
  return detail::finish(std::move(r));
}

namespace detail {

inline std::string girth_note(GraphFacts& f) {
  const auto& g = f.girth_value();
  return g.is_acyclic() ? "girth=acyclic (forests counted as girth >= 5)" : "girth=" + g.str();
}

} // namespace detail

/// girth >= 5 implies q1 < 2 + alpha(G).
inline TheoremReport check_girth_bound(GraphFacts& f) {
  auto r = detail::start(TheoremId::T34, f);
  if (f.n() == 0) return detail::not_met(std::move(r), "empty graph");
  if (!f.girth_value().at_least(5)) return detail::not_met(std::move(r), "girth " + f.girth_value().str() + " < 5");
  try {
    const auto alpha = static_cast<std::int64_t>(f.alpha());
    r.witness = detail::girth_note(f) + "; alpha=" + std::to_string(alpha);
    r.conclusion = detail::eigen_vs_rational(f.signless(), 1, Relation::Less, Rational(2 + alpha), f.options().tol);
  } catch (const ResourceError& e) {
    return detail::inconclusive(std::move(r), e.what());
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::finish(std::move(r));
}

/// Connected with girth >= 5 implies alpha'_* > n delta / (alpha + 2).
inline TheoremReport check_girth_fractional_bound(GraphFacts& f) {
  auto r = detail::start(TheoremId::C35, f);
  if (f.n() == 0) return detail::not_met(std::move(r), "empty graph");
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  if (!f.girth_value().at_least(5)) return detail::not_met(std::move(r), "girth " + f.girth_value().str() + " < 5");
  try {
    const auto alpha = static_cast<std::int64_t>(f.alpha());
    r.witness = detail::girth_note(f) + "; alpha=" + std::to_string(alpha);
    const Rational bound(static_cast<std::int64_t>(f.n() * f.delta()), alpha + 2);
    const Rational a = f.alpha_star().rational();
    auto s = a <=> bound;
    r.conclusion = Comparison{Quantity::of(a), Relation::Greater, Quantity::of(bound), s < 0 ? -1 : (s > 0 ? 1 : 0),
                              DecidedBy::Exact};
  } catch (const ResourceError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::finish(std::move(r));
}

/// q1 < 2 n delta / (n - 1) implies a fractional perfect matching.
inline TheoremReport check_fpm_q1(GraphFacts& f) {
  auto r = detail::start(TheoremId::T41, f);
  if (f.n() < 2) return detail::not_met(std::move(r), "needs n >= 2");
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  try {
    const auto n = static_cast<std::int64_t>(f.n());
    const Rational x(2 * n * static_cast<std::int64_t>(f.delta()), n - 1);
    r.hypothesis = detail::eigen_vs_rational(f.signless(), 1, Relation::Less, x, f.options().tol);
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::conclude_fpm(std::move(r), f);
}

/// q1(G^c) < 2 delta implies a fractional perfect matching.
inline TheoremReport check_fpm_complement(GraphFacts& f) {
  auto r = detail::start(TheoremId::T42, f);
  if (f.n() == 0) return detail::not_met(std::move(r), "empty graph");
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  try {
    const Rational x(2 * static_cast<std::int64_t>(f.delta()));
    r.hypothesis = detail::eigen_vs_rational(f.complement_signless(), 1, Relation::Less, x, f.options().tol);
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::conclude_fpm(std::move(r), f);
}

/// q1(G^c) < 2 delta + 1 implies a fractional perfect matching unless G is an
/// independent (delta+1)-set joined to a graph on delta vertices.
inline TheoremReport check_fpm_complement_refined(GraphFacts& f) {
  auto r = detail::start(TheoremId::T43, f);
  if (f.n() == 0) return detail::not_met(std::move(r), "empty graph");
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  try {
    const Rational x(2 * static_cast<std::int64_t>(f.delta()) + 1);
    r.hypothesis = detail::eigen_vs_rational(f.complement_signless(), 1, Relation::Less, x, f.options().tol);
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  r.diagnosis = "alpha_star=" + f.alpha_star().str();
  const bool fpm = f.fpm();
  if (r.hypothesis->decided() && r.hypothesis->holds() && !fpm) {
    const auto split = find_exception_split(f.graph(), f.delta());
    r.conclusion_flag = split.has_value();
    r.witness = split ? "exception A=" + split->str() : detail::deficiency_text(f.graph());
    r.diagnosis += split ? "; no FPM; exception graph" : "; no FPM; not an exception graph";
  } else {
    r.conclusion_flag = fpm;
  }
  return detail::finish(std::move(r));
}

namespace detail {

inline Rational lambda3_threshold(std::size_t k) {
  const auto kk = static_cast<std::int64_t>(k);
  return k % 2 == 0 ? Rational(kk - 1) + Rational(3, kk + 1) : Rational(kk - 1) + Rational(4, kk + 2);
}

} // namespace detail

/// Connected k-regular G with lambda3 <= k-1+3/(k+1) (k even) or
/// k-1+4/(k+2) (k odd) has a fractional perfect matching.
inline TheoremReport check_fpm_regular_lambda3(GraphFacts& f) {
  auto r = detail::start(TheoremId::T44, f);
  if (f.n() < 3) return detail::not_met(std::move(r), "needs n >= 3 for lambda3");
  if (!f.connected()) return detail::not_met(std::move(r), "not connected");
  if (!f.graph().is_regular()) return detail::not_met(std::move(r), "not regular");
  const std::size_t k = f.graph().degree(0);
  r.witness = "k=" + detail::i64(k) + " threshold=" + detail::lambda3_threshold(k).str();
  try {
    r.hypothesis = detail::eigen_vs_rational(f.adjacency(), 3, Relation::LessEqual, detail::lambda3_threshold(k), f.options().tol);
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::conclude_fpm(std::move(r), f);
}

/// Regular G with algebraic connectivity at least 1 has a fractional perfect matching.
inline TheoremReport check_fpm_algebraic_connectivity(GraphFacts& f) {
  auto r = detail::start(TheoremId::C45, f);
  if (f.n() < 2) return detail::not_met(std::move(r), "needs n >= 2");
  if (!f.graph().is_regular()) return detail::not_met(std::move(r), "not regular");
  try {
    r.hypothesis = detail::eigen_vs_rational(f.laplacian(), f.n() - 1, Relation::GreaterEqual, Rational(1), f.options().tol);
  } catch (const InconclusiveError& e) {
    return detail::inconclusive(std::move(r), e.what());
  }
  return detail::conclude_fpm(std::move(r), f);
}

inline TheoremReport run_check(TheoremId id, GraphFacts& f) {
  switch (id) {
  case TheoremId::T32: return check_lower_bound(f);
  case TheoremId::L31: return check_threshold(f);
  case TheoremId::L33: return check_degree_sum(f);
  case TheoremId::T34: return check_girth_bound(f);
  case TheoremId::C35: return check_girth_fractional_bound(f);
  case TheoremId::T41: return check_fpm_q1(f);
  case TheoremId::T42: return check_fpm_complement(f);
  case TheoremId::T43: return check_fpm_complement_refined(f);
  case TheoremId::T44: return check_fpm_regular_lambda3(f);
  case TheoremId::C45: return check_fpm_algebraic_connectivity(f);
  }
  throw ParameterError("unknown theorem");
}

} // namespace smt
