// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// CSV and JSON serialization of theorem reports.
/// CSV columns are fixed: theorem,graph6,outcome,lhs,rhs,witness.

#pragma once

#include <smt/theorems.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace smt {

inline constexpr std::string_view csv_header = "theorem,graph6,outcome,lhs,rhs,witness";

/// RFC 4180 quoting, applied only when needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Structural note, witness and diagnosis joined with " | ".
inline std::string witness_column(const TheoremReport& r) {
  std::string out;
  for (const std::string* part : {&r.structural_note, &r.witness, &r.diagnosis}) {
    if (part->empty()) continue;
    if (!out.empty()) out += " | ";
    out += *part;
  }
  return out;
}

inline std::string csv_row(const TheoremReport& r) {
  std::string lhs, rhs;
  if (const auto* c = r.headline()) {
    lhs = c->lhs.str();
    rhs = c->rhs.str();
  }
  return std::string(theorem_code(r.id)) + "," + csv_field(r.graph6) + "," + std::string(outcome_name(r.outcome)) + "," +
         csv_field(lhs) + "," + csv_field(rhs) + "," + csv_field(witness_column(r));
}

inline std::string to_csv(const std::vector<TheoremReport>& reports) {
  std::string out(csv_header);
  out += '\n';
  for (const auto& r : reports) out += csv_row(r) + '\n';
  return out;
}

namespace detail {

inline nlohmann::json quantity_json(const Quantity& q) {
  if (q.exact) return {{"exact", q.exact->str()}};
  return {{"lo", q.lo}, {"hi", q.hi}, {"text", q.str()}};
}

inline nlohmann::json comparison_json(const Comparison& c) {
  nlohmann::json j{{"lhs", quantity_json(c.lhs)}, {"relation", std::string(relation_symbol(c.rel))}, {"rhs", quantity_json(c.rhs)}};
  j["sign"] = c.sign ? nlohmann::json(*c.sign) : nlohmann::json(nullptr);
  j["decided_by"] = c.decided_by == DecidedBy::Enclosure ? "enclosure" : (c.decided_by == DecidedBy::Exact ? "exact" : "undecided");
  return j;
}

} // namespace detail

inline nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j{{"theorem", std::string(theorem_code(r.id))},
                   {"graph6", r.graph6},
                   {"outcome", std::string(outcome_name(r.outcome))},
                   {"structural_ok", r.structural_ok}};
  if (!r.structural_note.empty()) j["structural_note"] = r.structural_note;
  if (r.hypothesis) j["hypothesis"] = detail::comparison_json(*r.hypothesis);
  if (r.conclusion) j["conclusion"] = detail::comparison_json(*r.conclusion);
  if (r.conclusion_flag) j["conclusion_holds"] = *r.conclusion_flag;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.diagnosis.empty()) j["diagnosis"] = r.diagnosis;
  return j;
}

inline nlohmann::json to_json(const std::vector<TheoremReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

} // namespace smt
