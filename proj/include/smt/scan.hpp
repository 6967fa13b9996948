// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Runs theorem checkers over a list of graph6 lines with a worker pool.
/// Results are merged back in input order, so output does not depend on the
/// number of workers.

#pragma once

#include <smt/graph6.hpp>
#include <smt/theorems.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace smt {

struct LineFailure {
  std::size_t line = 0; // 1-based
  std::string message;
};

struct ScanResult {
  std::vector<TheoremReport> reports;
  std::vector<LineFailure> failures;
  std::size_t graphs = 0;

  std::size_t count(CheckOutcome o) const {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [o](const auto& r) { return r.outcome == o; }));
  }
  bool has_violation() const { return count(CheckOutcome::Violated) > 0; }

  /// "graphs=.. HoldsStrict=.. ..."
  std::string summary() const {
    std::string s = "graphs=" + std::to_string(graphs) + " reports=" + std::to_string(reports.size());
    for (auto o : {CheckOutcome::HoldsStrict, CheckOutcome::HoldsWithEquality, CheckOutcome::HypothesisNotMet,
                   CheckOutcome::Inconclusive, CheckOutcome::Violated})
      s += " " + std::string(outcome_name(o)) + "=" + std::to_string(count(o));
    s += " parse_failures=" + std::to_string(failures.size());
    return s;
  }
};

namespace detail {

struct LineOutcome {
  bool skipped = false;
  std::optional<LineFailure> failure;
  std::vector<TheoremReport> reports;
};

inline bool blank_or_header(const std::string& line) {
  std::string_view v = line;
  while (!v.empty() && (v.back() == '\r' || v.back() == '\n' || v.back() == ' ')) v.remove_suffix(1);
  return v.empty() || v == graph6_header;
}

inline LineOutcome process_line(const std::string& text, std::size_t line_no, const std::vector<TheoremId>& ids,
                                const CheckOptions& options) {
  LineOutcome out;
  if (blank_or_header(text)) {
    out.skipped = true;
    return out;
  }
  Graph g;
  try {
    g = from_graph6(text);
  } catch (const std::exception& e) {
    out.failure = LineFailure{line_no, e.what()};
    return out;
  }
  GraphFacts facts(std::move(g), options);
  for (TheoremId id : ids) {
    try {
      out.reports.push_back(run_check(id, facts));
    } catch (const std::exception& e) {
      TheoremReport r;
      r.id = id;
      r.graph6 = facts.graph6();
      r.outcome = CheckOutcome::Inconclusive;
      r.diagnosis = std::string("error: ") + e.what();
      out.reports.push_back(std::move(r));
    }
  }
  return out;
}

} // namespace detail

inline ScanResult scan_lines(const std::vector<std::string>& lines, const std::vector<TheoremId>& ids,
                             const CheckOptions& options, std::size_t workers = 1) {
  std::vector<detail::LineOutcome> outcomes(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) outcomes[i] = detail::process_line(lines[i], i + 1, ids, options);
  };
  workers = std::max<std::size_t>(1, std::min(workers, lines.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ScanResult result;
  for (auto& o : outcomes) {
    if (o.skipped) continue;
    if (o.failure) {
      result.failures.push_back(*o.failure);
      continue;
    }
    ++result.graphs;
    for (auto& r : o.reports) result.reports.push_back(std::move(r));
  }
  return result;
}

} // namespace smt
