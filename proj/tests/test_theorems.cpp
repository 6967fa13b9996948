// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <smt/smt.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace smt;

namespace {

TheoremReport check(TheoremId id, const Graph& g, CheckOptions opt = {}) {
  GraphFacts f(g, opt);
  return run_check(id, f);
}

CheckOutcome outcome(TheoremId id, const Graph& g, CheckOptions opt = {}) { return check(id, g, opt).outcome; }

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

using enum CheckOutcome;

} // namespace

TEST_CASE("theorem registry", "[theorems]") {
  REQUIRE(all_theorems.size() == 10);
  for (auto id : all_theorems) REQUIRE(parse_theorem_id(theorem_code(id)) == id);
  REQUIRE_FALSE(parse_theorem_id("t99").has_value());
  REQUIRE_FALSE(parse_theorem_id("T32").has_value());
}

TEST_CASE("lower bound on the fractional matching number", "[theorems][t32]") {
  const auto c5 = check(TheoremId::T32, cycle_graph(5));
  REQUIRE(c5.outcome == HoldsWithEquality);
  REQUIRE(contains(c5.diagnosis, "characterization gap"));

  const auto k4 = check(TheoremId::T32, complete_graph(4));
  REQUIRE(k4.outcome == HoldsWithEquality);
  REQUIRE(contains(k4.diagnosis, "characterization gap"));

  const auto p3 = check(TheoremId::T32, path_graph(3));
  REQUIRE(p3.outcome == HoldsWithEquality);
  REQUIRE(contains(p3.diagnosis, "H(1,1) member: yes"));
  REQUIRE(contains(p3.diagnosis, "matches characterization"));

  const auto star = check(TheoremId::T32, star_graph(3));
  REQUIRE(star.outcome == HoldsWithEquality);
  REQUIRE(contains(star.diagnosis, "z=2"));
  REQUIRE(contains(star.diagnosis, "H(1,2) member: yes"));

  REQUIRE(outcome(TheoremId::T32, path_graph(5)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::T32, disjoint_union(complete_graph(2), complete_graph(1))) == HypothesisNotMet);
  REQUIRE(outcome(TheoremId::T32, complete_graph(1)) == HypothesisNotMet);
}

TEST_CASE("threshold bound", "[theorems][l31]") {
  GraphFacts c5(cycle_graph(5), {});
  REQUIRE(check_threshold(c5, Rational(1)).outcome == HoldsStrict);
  REQUIRE(check_threshold(c5, Rational(1, 10)).outcome == HoldsStrict);
  GraphFacts p3(path_graph(3), {});
  REQUIRE(check_threshold(p3, Rational(1, 2)).outcome == HypothesisNotMet);
  REQUIRE_THROWS_AS(check_threshold(p3, Rational(0)), ParameterError);
  REQUIRE_THROWS_AS(check_threshold(p3, Rational(3)), ParameterError);

  CheckOptions wide;
  wide.threshold_k = Rational(7);
  const auto r = check(TheoremId::L31, path_graph(3), wide);
  REQUIRE(r.outcome == HypothesisNotMet);
  REQUIRE(contains(r.structural_note, "outside"));
}

TEST_CASE("degree-sum bound", "[theorems][l33]") {
  const auto k32 = check(TheoremId::L33, complete_bipartite(3, 2));
  REQUIRE(k32.outcome == HoldsWithEquality);
  REQUIRE(k32.diagnosis == "equality; semi-regular bipartite");

  const auto c5 = check(TheoremId::L33, cycle_graph(5));
  REQUIRE(c5.outcome == HoldsWithEquality);
  REQUIRE(contains(c5.diagnosis, "regular non-bipartite"));

  REQUIRE(check(TheoremId::L33, cycle_graph(6)).diagnosis == "equality; regular bipartite");
  REQUIRE(outcome(TheoremId::L33, path_graph(4)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::L33, empty_graph(1)) == HypothesisNotMet);
}

TEST_CASE("girth bounds", "[theorems][t34][c35]") {
  REQUIRE(outcome(TheoremId::T34, path_graph(5)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::T34, cycle_graph(5)) == HoldsWithEquality);
  REQUIRE(outcome(TheoremId::T34, complete_graph(4)) == HypothesisNotMet);
  // q1 = 6 = 2 + alpha: a second regular graph on the strict boundary.
  REQUIRE(outcome(TheoremId::T34, petersen_graph()) == HoldsWithEquality);

  REQUIRE(outcome(TheoremId::C35, path_graph(5)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::C35, cycle_graph(5)) == HoldsWithEquality);
  REQUIRE(outcome(TheoremId::C35, cycle_graph(7)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::C35, complete_graph(4)) == HypothesisNotMet);
  REQUIRE(outcome(TheoremId::C35, petersen_graph()) == HoldsWithEquality); // 5 = 30/6
}

TEST_CASE("fractional perfect matching conditions", "[theorems][t41][t42][t43]") {
  REQUIRE(outcome(TheoremId::T41, cycle_graph(5)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::T41, path_graph(3)) == HypothesisNotMet);
  REQUIRE(outcome(TheoremId::T41, complete_graph(4)) == HoldsStrict);

  REQUIRE(outcome(TheoremId::T42, complete_graph(4)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::T42, cycle_graph(5)) == HypothesisNotMet);
  REQUIRE(outcome(TheoremId::T42, cycle_graph(4)) == HoldsStrict);

  const auto p3 = check(TheoremId::T43, path_graph(3));
  REQUIRE(p3.outcome == HoldsStrict);
  REQUIRE(contains(p3.witness, "exception A={0,2}"));
  REQUIRE(contains(p3.diagnosis, "exception graph"));
  REQUIRE(outcome(TheoremId::T43, construct_exception(2, complete_graph(2))) == HoldsStrict);
  REQUIRE(outcome(TheoremId::T43, cycle_graph(5)) == HoldsStrict);
}

TEST_CASE("regular-graph spectral conditions", "[theorems][t44][c45]") {
  REQUIRE(detail::lambda3_threshold(2) == Rational(2));
  REQUIRE(detail::lambda3_threshold(3) == Rational(14, 5));
  REQUIRE(detail::lambda3_threshold(4) == Rational(18, 5));

  const auto pet = check(TheoremId::T44, petersen_graph());
  REQUIRE(pet.outcome == HoldsStrict);
  REQUIRE(contains(pet.witness, "threshold=14/5"));
  REQUIRE(pet.hypothesis->lhs.lo <= 1.0);
  REQUIRE(pet.hypothesis->lhs.hi >= 1.0);
  REQUIRE(outcome(TheoremId::T44, complete_graph(4)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::T44, cycle_graph(5)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::T44, path_graph(4)) == HypothesisNotMet);

  REQUIRE(outcome(TheoremId::C45, complete_graph(4)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::C45, cycle_graph(5)) == HoldsStrict);
  REQUIRE(outcome(TheoremId::C45, cycle_graph(8)) == HypothesisNotMet);
  REQUIRE(outcome(TheoremId::C45, petersen_graph()) == HoldsStrict);
}

TEST_CASE("C_5 golden rows", "[theorems][golden]") {
  const auto result = scan_lines({"Dhc"}, {all_theorems.begin(), all_theorems.end()}, {}, 1);
  const std::string expected =
      "theorem,graph6,outcome,lhs,rhs,witness\n"
      "t32,Dhc,HoldsWithEquality,5/2,2.500000001±7.0e-10,\"equality; z=0 (integer); H(2,0) member: no (not bipartite); "
      "characterization gap\"\n"
      "l31,Dhc,HoldsStrict,5/2,2,k=1\n"
      "l33,Dhc,HoldsWithEquality,4.00000000±1.1e-09,4,edge 0-1 degree sum 4 | equality; regular non-bipartite (outside "
      "stated equality characterization)\n"
      "t34,Dhc,HoldsWithEquality,4.00000000±1.1e-09,4,girth=5; alpha=2\n"
      "c35,Dhc,HoldsWithEquality,5/2,5/2,girth=5; alpha=2\n"
      "t41,Dhc,HoldsStrict,4.00000000±1.1e-09,5,alpha_star=5/2\n"
      "t42,Dhc,HypothesisNotMet,4.00000000±1.1e-09,4,alpha_star=5/2\n"
      "t43,Dhc,HoldsStrict,4.00000000±1.1e-09,5,alpha_star=5/2\n"
      "t44,Dhc,HoldsStrict,0.618033989±2.8e-10,2,k=2 threshold=2 | alpha_star=5/2\n"
      "c45,Dhc,HoldsStrict,1.381966011±5.6e-10,1,alpha_star=5/2\n";
  REQUIRE(to_csv(result.reports) == expected);
}

TEST_CASE("derive_outcome", "[theorems]") {
  TheoremReport r;
  r.structural_ok = false;
  REQUIRE(derive_outcome(r) == HypothesisNotMet);

  r = TheoremReport{};
  r.hypothesis = Comparison{Quantity::of(Rational(1)), Relation::Less, Quantity::of(Rational(2)), -1, DecidedBy::Exact};
  r.conclusion = Comparison{Quantity::of(Rational(3)), Relation::Greater, Quantity::of(Rational(3)), 0, DecidedBy::Exact};
  REQUIRE(derive_outcome(r) == HoldsWithEquality);
  r.conclusion->sign = -1;
  REQUIRE(derive_outcome(r) == Violated);
  r.conclusion->sign = std::nullopt;
  REQUIRE(derive_outcome(r) == Inconclusive);
  r.hypothesis->sign = 1;
  REQUIRE(derive_outcome(r) == HypothesisNotMet);

  r = TheoremReport{};
  r.conclusion_flag = false;
  REQUIRE(derive_outcome(r) == Violated);
  r.conclusion_flag = true;
  REQUIRE(derive_outcome(r) == HoldsStrict);
}

TEST_CASE("re-evaluating stored evidence reproduces every outcome", "[theorems][property]") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      GraphFacts f(g, {});
      for (auto id : all_theorems) {
        const auto r = run_check(id, f);
        REQUIRE(r.outcome != Violated);
        REQUIRE(r.outcome != Inconclusive);
        REQUIRE(reevaluate(r) == r.outcome);
        ++checked;
      }
    }
  REQUIRE(checked == 10 * (1 + 2 + 4 + 11 + 34 + 156));
}

TEST_CASE("no violations on random connected graphs", "[theorems][property]") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(9, 16)(rng);
    const Graph g = oracle::random_connected_graph(n, 0.25, rng);
    GraphFacts f(g, {});
    for (auto id : all_theorems) {
      const auto r = run_check(id, f);
      REQUIRE(r.outcome != Violated);
      REQUIRE(reevaluate(r) == r.outcome);
    }
  }
}

TEST_CASE("report serialization", "[theorems][io]") {
  REQUIRE(csv_field("plain") == "plain");
  REQUIRE(csv_field("a,b") == "\"a,b\"");
  REQUIRE(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");

  const auto r = check(TheoremId::T41, cycle_graph(5));
  const auto j = to_json(r);
  REQUIRE(j.at("theorem") == "t41");
  REQUIRE(j.at("outcome") == "HoldsStrict");
  REQUIRE(j.at("graph6") == "Dhc");
}
