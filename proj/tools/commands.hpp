// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Subcommand implementations for the `smt` command-line tool. Kept apart from
/// argument parsing so the tests can drive them with string streams.

#pragma once

#include <smt/smt.hpp>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace smt::cli {

enum ExitCode : int { ok = 0, violations = 1, usage = 2, partial_failure = 3 };

enum class Format { Csv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ParameterError("unknown format '" + s + "' (expected csv or json)");
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline std::vector<TheoremId> parse_theorems(const std::string& list) {
  if (list.empty() || list == "all") return {all_theorems.begin(), all_theorems.end()};
  std::vector<TheoremId> ids;
  for (const auto& code : split_list(list)) {
    auto id = parse_theorem_id(code);
    if (!id) throw ParameterError("unknown theorem id '" + code + "'");
    ids.push_back(*id);
  }
  return ids;
}

/// Default tolerance, overridden by SMT_TOL when set.
inline double default_tol_from_env() {
  if (const char* env = std::getenv("SMT_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw ParameterError(std::string("invalid SMT_TOL value '") + env + "'");
    return v;
  }
  return default_tolerance;
}

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

inline std::vector<std::string> read_lines_from(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  return read_lines(in);
}

// compute

inline const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> q{"n",     "m",     "delta", "q1",        "lambda1", "lambda3",
                                          "mu-n-1", "alpha", "girth", "alpha-star", "fpm"};
  return q;
}

struct ComputeConfig {
  std::vector<std::string> quantities = known_quantities();
  double tol = default_tolerance;
  Format format = Format::Csv;
};

inline std::string enclosure_text(const EigenEnclosure& e) { return Quantity::of(e).str(); }

inline std::string compute_quantity(const Graph& g, const std::string& q, double tol) {
  const std::size_t n = g.order();
  if (q == "n") return std::to_string(n);
  if (q == "m") return std::to_string(g.size());
  if (q == "delta") return n == 0 ? "NA" : std::to_string(min_degree(g));
  if (q == "q1") return n == 0 ? "NA" : enclosure_text(smt::q1(g, tol));
  if (q == "lambda1") return n == 0 ? "NA" : enclosure_text(eigenvalue(build_matrix(g, MatrixKind::Adjacency), 1, tol));
  if (q == "lambda3") return n < 3 ? "NA" : enclosure_text(eigenvalue(build_matrix(g, MatrixKind::Adjacency), 3, tol));
  if (q == "mu-n-1") return n < 2 ? "NA" : enclosure_text(algebraic_connectivity(g, tol));
  if (q == "alpha") return std::to_string(independence_number(g));
  if (q == "girth") return girth(g).str();
  if (q == "alpha-star") return fractional_matching_number(g).str();
  if (q == "fpm") return has_fractional_perfect_matching(g) ? "true" : "false";
  throw ParameterError("unknown quantity '" + q + "'");
}

/// One row per graph. A line that fails to parse is reported on `err` and
/// makes the exit code partial_failure; the remaining lines still run.
inline int cmd_compute(const std::vector<std::string>& lines, const ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto& q : cfg.quantities)
    if (std::find(known_quantities().begin(), known_quantities().end(), q) == known_quantities().end()) {
      err << "error: unknown quantity '" << q << "'\n";
      return usage;
    }
  bool failed = false;
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format == Format::Csv) {
    out << "graph6";
    for (const auto& q : cfg.quantities) out << ',' << q;
    out << '\n';
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::blank_or_header(lines[i])) continue;
    Graph g;
    try {
      g = from_graph6(lines[i]);
    } catch (const std::exception& e) {
      err << "line " << (i + 1) << ": " << e.what() << '\n';
      failed = true;
      continue;
    }
    const std::string code = to_graph6(g);
    nlohmann::json row{{"graph6", code}};
    if (cfg.format == Format::Csv) out << csv_field(code);
    for (const auto& q : cfg.quantities) {
      std::string value;
      try {
        value = compute_quantity(g, q, cfg.tol);
      } catch (const std::exception& e) {
        value = std::string("error: ") + e.what();
        failed = true;
      }
      if (cfg.format == Format::Csv) out << ',' << csv_field(value);
      row[q] = value;
    }
    if (cfg.format == Format::Csv) out << '\n';
    else rows.push_back(std::move(row));
  }
  if (cfg.format == Format::Json) out << rows.dump(2) << '\n';
  return failed ? partial_failure : ok;
}

// verify / scan

struct ScanConfig {
  std::vector<TheoremId> theorems{all_theorems.begin(), all_theorems.end()};
  CheckOptions options{};
  std::size_t workers = 1;
  Format format = Format::Csv;

  void validate() const {
    if (!(options.tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (theorems.empty()) throw ParameterError("no theorems selected");
  }
};

inline std::size_t default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

inline int exit_code_for(const ScanResult& r) {
  if (r.has_violation()) return violations;
  if (!r.failures.empty()) return partial_failure;
  return ok;
}

inline void write_reports(const ScanResult& r, Format format, std::ostream& out) {
  if (format == Format::Csv) out << to_csv(r.reports);
  else out << to_json(r.reports).dump(2) << '\n';
}

/// Reports on `out`, then a "# summary" line; parse failures go to `err`.
inline int cmd_verify(const std::vector<std::string>& lines, const ScanConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const auto result = scan_lines(lines, cfg.theorems, cfg.options, cfg.workers);
  for (const auto& f : result.failures) err << "line " << f.line << ": " << f.message << '\n';
  write_reports(result, cfg.format, out);
  if (cfg.format == Format::Csv) out << "# summary: " << result.summary() << '\n';
  else err << "summary: " << result.summary() << '\n';
  return exit_code_for(result);
}

/// Report body only (byte-stable across worker counts); summary on `err`.
inline int cmd_scan(const std::vector<std::string>& lines, const ScanConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const auto result = scan_lines(lines, cfg.theorems, cfg.options, cfg.workers);
  for (const auto& f : result.failures) err << "line " << f.line << ": " << f.message << '\n';
  write_reports(result, cfg.format, out);
  err << "summary: " << result.summary() << '\n';
  return exit_code_for(result);
}

// family

/// Graph6 line of the canonical H(delta,k) member, then a JSON block of
/// predicted versus computed spectral values.
inline int cmd_family(const FamilyParams& p, double tol, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = construct_H(p);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  const std::size_t n = g.order();
  const auto q = smt::q1(g, tol);
  const auto l1 = eigenvalue(build_matrix(g, MatrixKind::Adjacency), 1, tol);
  const auto predicted = predicted_q1(p.delta, p.k, n);
  const auto signless = build_matrix(g, MatrixKind::SignlessLaplacian);
  const auto part = family_partition(p);
  const auto quotient = quotient_spectral_radius(quotient_matrix(signless, part), tol);
  nlohmann::json j{{"delta", p.delta},
                   {"k", p.k},
                   {"m", p.m},
                   {"n", n},
                   {"v2_degree", p.v2_degree()},
                   {"predicted_q1", predicted.str()},
                   {"computed_q1", Quantity::of(q).str()},
                   {"q1_matches", q.contains(predicted)},
                   {"quotient_q1", Quantity::of(quotient).str()},
                   {"equitable", is_equitable(signless, part)},
                   {"predicted_lambda1", predicted_lambda1(p.delta, p.k, n)},
                   {"computed_lambda1", Quantity::of(l1).str()},
                   {"alpha_star", fractional_matching_number(g).str()},
                   {"predicted_alpha_star", Rational(static_cast<std::int64_t>(n - p.k), 2).str()}};
  out << to_graph6(g) << '\n' << j.dump(2) << '\n';
  return ok;
}

// generate / certificate

inline int cmd_generate(std::size_t min_n, std::size_t max_n, bool connected, std::ostream& out, std::ostream& err) {
  if (min_n > max_n) {
    err << "error: --min-n exceeds --n\n";
    return usage;
  }
  try {
    for (std::size_t n = min_n; n <= max_n; ++n)
      for (const auto& g : enumerate_graphs(n, connected)) out << to_graph6(g) << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return ok;
}

/// "# <graph6> alpha_star=<value>" followed by "u v numerator/2" lines.
inline int cmd_certificate(const std::vector<std::string>& lines, std::ostream& out, std::ostream& err) {
  bool failed = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::blank_or_header(lines[i])) continue;
    try {
      const Graph g = from_graph6(lines[i]);
      const auto cert = half_integral_certificate(g);
      out << "# " << to_graph6(g) << " alpha_star=" << cert.total() << '\n' << cert.to_lines();
    } catch (const std::exception& e) {
      err << "line " << (i + 1) << ": " << e.what() << '\n';
      failed = true;
    }
  }
  return failed ? partial_failure : ok;
}

} // namespace smt::cli
