// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace smt;
using namespace smt::cli;

/// Opens --output if given, else stdout.
class OutputTarget {
public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional matchings and signless Laplacian bounds on graph6 corpora"};
  app.require_subcommand(1);

  double tol = default_tolerance;
  std::string input, output, format = "csv", theorems = "all", quantities, k_text = "1";
  std::size_t workers = default_workers();
  std::size_t delta = 1, k = 1, m = 1, n_max = 0, n_min = 0;
  bool connected = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "graph6 file, one graph per line")->required();
    sub->add_option("--output", output, "write here instead of stdout");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--tol", tol, "relative eigenvalue tolerance (default 1e-9, or SMT_TOL)");
  };
  auto add_theorems = [&](CLI::App* sub) {
    sub->add_option("--theorems", theorems, "comma list from t32,l31,l33,t34,c35,t41,t42,t43,t44,c45 or 'all'");
    sub->add_option("--workers", workers, "worker threads");
    sub->add_option("--k", k_text, "real k for l31, as p/q or decimal (default 1)");
  };

  auto* compute = app.add_subcommand("compute", "per-graph invariants");
  add_common(compute);
  compute->add_option("--quantities", quantities, "comma list of n,m,delta,q1,lambda1,lambda3,mu-n-1,alpha,girth,alpha-star,fpm");

  auto* verify = app.add_subcommand("verify", "theorem reports with a summary line");
  add_common(verify);
  add_theorems(verify);

  auto* scan = app.add_subcommand("scan", "corpus scan; exit 0 iff no violations");
  add_common(scan);
  add_theorems(scan);

  auto* family = app.add_subcommand("family", "construct an H(delta,k) member with |V2| = m");
  family->add_option("--delta", delta, "degree of the V1 vertices")->required();
  family->add_option("--k", k, "|V1| - |V2|")->required();
  family->add_option("--m", m, "|V2|")->required();
  family->add_option("--tol", tol, "relative eigenvalue tolerance");

  auto* generate = app.add_subcommand("generate", "all graphs on n vertices up to isomorphism, as graph6");
  generate->add_option("--n", n_max, "largest order (at most 10)")->required();
  generate->add_option("--min-n", n_min, "smallest order (default: --n)");
  generate->add_flag("--connected", connected, "connected graphs only");

  auto* certificate = app.add_subcommand("certificate", "half-integral optimal fractional matchings");
  certificate->add_option("--input", input, "graph6 file")->required();

  try {
    tol = default_tol_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (family->parsed()) return cmd_family(FamilyParams{delta, k, m}, tol, std::cout, std::cerr);
    if (generate->parsed()) return cmd_generate(n_min == 0 ? n_max : n_min, n_max, connected, std::cout, std::cerr);

    std::vector<std::string> lines;
    try {
      lines = read_lines_from(input);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return usage;
    }
    if (certificate->parsed()) return cmd_certificate(lines, std::cout, std::cerr);

    OutputTarget target(output);
    if (compute->parsed()) {
      ComputeConfig cfg;
      if (!quantities.empty()) cfg.quantities = split_list(quantities);
      cfg.tol = tol;
      cfg.format = parse_format(format);
      return cmd_compute(lines, cfg, target.stream(), std::cerr);
    }

    ScanConfig cfg;
    cfg.theorems = parse_theorems(theorems);
    cfg.options.tol = tol;
    cfg.options.threshold_k = Rational::parse(k_text);
    cfg.workers = workers;
    cfg.format = parse_format(format);
    cfg.validate();
    if (verify->parsed()) return cmd_verify(lines, cfg, target.stream(), std::cerr);
    return cmd_scan(lines, cfg, target.stream(), std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
