// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: solve | asymptotic | sweep | verify.
// Results go to stdout (or --out), diagnostics to stderr. Exit codes:
//   solve:  0 = at least one solution, 2 = none, 1 = error
//   verify: 0 = all checks pass, 3 = some check failed, 1 = unreadable input
//   other:  0 = success, 1 = error

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qes/magyari.hpp"
#include "qes/oracle.hpp"
#include "qes/output.hpp"
#include "qes/parameters.hpp"
#include "qes/solver.hpp"

namespace {

using namespace qes;

struct ParamFlags {
  std::string ell, beta, gamma;
  std::string B, C, G, L;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--ell", f.ell, "effective angular momentum (rational, e.g. 1/2)");
  cmd->add_option("--beta", f.beta, "internal coupling beta = B/2");
  cmd->add_option("--gamma", f.gamma, "internal coupling gamma = (beta^2 - C)/2");
  cmd->add_option("--B", f.B, "cubic coupling B");
  cmd->add_option("--C", f.C, "quadratic coupling C");
  cmd->add_option("--G,--g", f.G, "centrifugal spike strength G");
  cmd->add_option("--L", f.L, "partial-wave index L (default 0)");
}

/// Builds the internal triple from whichever coupling convention was given.
InternalParameters resolve_parameters(const ParamFlags& f, ModelParameters& model_echo, int N) {
  const bool internal_given = !f.ell.empty() || !f.beta.empty() || !f.gamma.empty();
  const bool model_given = !f.B.empty() || !f.C.empty() || !f.G.empty() || !f.L.empty();
  if (internal_given && model_given)
    throw CLI::ValidationError("parameters",
                               "give either (--ell, --beta, --gamma) or (--B, --C, --G, --L)");

  InternalParameters ip;
  if (internal_given) {
    ip.beta = f.beta.empty() ? Rational(0) : parse_rational(f.beta);
    ip.gamma = f.gamma.empty() ? Rational(0) : parse_rational(f.gamma);
    ip.ell = f.ell.empty() ? Rational(0) : parse_rational(f.ell);
    ip.ell_exact = true;
    if (ip.ell < Rational(-1, 2)) throw CLI::ValidationError("--ell", "must be >= -1/2");
    model_echo = model_from_internal(ip, N);
  } else {
    ModelParameters mp;
    mp.B = f.B.empty() ? Rational(0) : parse_rational(f.B);
    mp.C = f.C.empty() ? Rational(0) : parse_rational(f.C);
    mp.G = f.G.empty() ? Rational(0) : parse_rational(f.G);
    mp.L = f.L.empty() ? Rational(0) : parse_rational(f.L);
    mp.N = N;
    ip = internal_from_model(mp);
    mp.D = d_coupling(ip.ell, ip.beta, ip.gamma, N);
    model_echo = mp;
  }
  return ip;
}

void write_output(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << body;
}

Precision precision_flag(int bits) {
  if (bits != 64 && bits != 128 && bits != 256)
    throw CLI::ValidationError("--precision", "supported tiers: 64, 128, 256");
  return precision_from_bits(bits);
}

std::vector<double> geometric_grid(const std::string& range) {
  const auto c1 = range.find(':');
  const auto c2 = range.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("--ell-range", "expected lo:hi:points");
  const double lo = std::stod(range.substr(0, c1));
  const double hi = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
  const int points = std::stoi(range.substr(c2 + 1));
  if (!(lo > 0) || !(hi >= lo) || points < 1)
    throw CLI::ValidationError("--ell-range", "need 0 < lo <= hi and points >= 1");
  std::vector<double> grid;
  if (points == 1 || hi == lo) {
    grid.push_back(lo);
    return grid;
  }
  for (int i = 0; i < points; ++i)
    grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
  return grid;
}

int run_solve(int N, const ParamFlags& flags, int bits, const std::string& strategy,
              const std::string& format, bool real_only, const std::string& out_path) {
  SolveDocument doc;
  doc.params.N = N;
  doc.params.internal = resolve_parameters(flags, doc.params.model, N);
  doc.params.precision_bits = bits;

  SolveOptions opts;
  opts.precision = precision_flag(bits);
  std::string strat = strategy;
  if (strat.empty()) strat = N <= 12 ? "scan" : "continuation";
  if (strat == "scan")
    opts.strategy = Strategy::scan;
  else if (strat == "continuation")
    opts.strategy = Strategy::continuation;
  else
    throw CLI::ValidationError("--strategy", "must be scan or continuation");
  doc.params.strategy = strat;

  auto report = solve_all(doc.params.internal, N, opts);
  for (const auto& w : report.warnings) std::cerr << "note: " << w << "\n";
  doc.warnings = std::move(report.warnings);
  for (auto& s : report.solutions) {
    if (real_only && !s.real_flag) continue;
    doc.solutions.push_back(std::move(s));
  }

  write_output(format == "csv" ? emit_csv(doc) : emit_json(doc), out_path);
  return doc.solutions.empty() ? 2 : 0;
}

int run_asymptotic(int N, const ParamFlags& flags, const std::string& format,
                   const std::string& out_path) {
  AsymptoticDocument doc;
  doc.N = N;
  doc.multiplets = multiplets(N);
  if (!flags.ell.empty()) {
    doc.ell = parse_rational(flags.ell);
    doc.beta = flags.beta.empty() ? Rational(0) : parse_rational(flags.beta);
    doc.gamma = flags.gamma.empty() ? Rational(0) : parse_rational(flags.gamma);
    for (const auto& m : doc.multiplets)
      doc.spectra.push_back(asymptotic_spectrum<Float256>(N, m.k, to_real<Float256>(*doc.ell),
                                                          to_real<Float256>(*doc.beta),
                                                          to_real<Float256>(*doc.gamma)));
  }
  write_output(format == "csv" ? emit_csv(doc) : emit_json(doc), out_path);
  return 0;
}

int run_sweep(int N, int k, const std::string& range, const ParamFlags& flags, int bits,
              const std::string& format, const std::string& out_path) {
  SweepDocument doc;
  doc.beta = flags.beta.empty() ? Rational(0) : parse_rational(flags.beta);
  doc.gamma = flags.gamma.empty() ? Rational(0) : parse_rational(flags.gamma);
  doc.record = sweep(doc.beta, doc.gamma, N, k, geometric_grid(range), precision_flag(bits));
  if (!doc.record.complete) std::cerr << "note: branch lost during continuation; partial sweep\n";
  write_output(format == "csv" ? emit_csv(doc) : emit_json(doc), out_path);
  return 0;
}

int run_verify(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    std::cerr << "error: cannot read " << path << "\n";
    return 1;
  }
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());

  SolveDocument doc;
  try {
    doc = parse_solve_json(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const InternalParameters& ip = doc.params.internal;
  const int N = doc.params.N;
  const MagyariSystem<Float256> sys(N, to_real<Float256>(ip.ell), to_real<Float256>(ip.beta),
                                    to_real<Float256>(ip.gamma));
  const Float256 ell256 = to_real<Float256>(ip.ell);
  const Float256 beta256 = to_real<Float256>(ip.beta);
  const Float256 gamma256 = to_real<Float256>(ip.gamma);
  const Float256 d256 = to_real<Float256>(d_coupling(ip.ell, ip.beta, ip.gamma, N));

  std::vector<std::string> failures;
  for (size_t i = 0; i < doc.solutions.size(); ++i) {
    const auto& s = doc.solutions[i];
    const std::string tag = "solution " + std::to_string(i);
    const int bits = s.precision_bits;

    const auto kern = pivoted_kernel(sys, s.E, s.F, bits);
    if (kern.kernel_dim < 1) failures.push_back(tag + ": no kernel at recorded (E, F)");

    try {
      const auto rep = residual_report(sys, s.E, s.F, s.omega);
      if (!(rep.relative_to(s.E, s.F) < 10 * residual_tolerance<Float256>(bits)))
        failures.push_back(tag + ": residual above tolerance");
    } catch (const std::exception& e) {
      failures.push_back(tag + ": " + std::string(e.what()));
      continue;
    }

    // Both maximal minors must be numerically singular.
    const auto full = assemble(sys, s.E, s.F);
    Mat<Complex256> top(N + 1, N + 1), bottom(N + 1, N + 1);
    for (int r = 0; r <= N; ++r)
      for (int c = 0; c <= N; ++c) {
        top(r, c) = full(r, c);
        bottom(r, c) = full(r + 1, c);
      }
    const Float256 ktol = kernel_tolerance<Float256>(bits);
    const Float256 anchor = 1 + abs(s.E) + abs(s.F) + structural_scale(sys);
    if (pivoted_kernel_solve(top, ktol, -1, anchor).kernel_dim < 1)
      failures.push_back(tag + ": rows 0..N minor not singular");
    if (pivoted_kernel_solve(bottom, ktol, -1, anchor).kernel_dim < 1)
      failures.push_back(tag + ": rows 1..N+1 minor not singular");

    const auto cert = ode_certificate<Complex256, Float256>(N, ell256, beta256, gamma256, d256,
                                                            s.E, s.F, s.omega);
    if (!(cert.relative() < Float256(1e-10)))
      failures.push_back(tag + ": polynomial-identity certificate failed");
  }

  if (failures.empty()) {
    std::cout << "verify: " << doc.solutions.size() << " solution(s), all checks passed\n";
    return 0;
  }
  for (const auto& f : failures) std::cerr << "FAIL " << f << "\n";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QES conditions of the PT-symmetric quartic oscillator with imaginary Coulomb "
               "and centrifugal terms: construction, solving, independent verification"};
  app.require_subcommand(1);

  int N = 0, k = 0, bits = 64;
  ParamFlags flags;
  std::string strategy, format = "json", out_path, range, verify_path;
  bool real_only = false;

  auto* solve = app.add_subcommand("solve", "find all simultaneous (E, F) pairs at finite ell");
  solve->add_option("--N", N, "polynomial degree N")->required();
  add_param_flags(solve, flags);
  solve->add_option("--precision", bits, "working precision in bits (64, 128, 256)");
  solve->add_option("--strategy", strategy, "scan | continuation");
  solve->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  solve->add_flag("--real-only", real_only, "emit only solutions flagged real");
  solve->add_option("--out", out_path, "write the record to a file instead of stdout");

  auto* asym =
      app.add_subcommand("asymptotic", "integer root multiplets and leading-order spectra");
  asym->add_option("--N", N, "polynomial degree N")->required();
  add_param_flags(asym, flags);
  asym->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  asym->add_option("--out", out_path, "output file");

  auto* sw = app.add_subcommand("sweep", "track one branch across a geometric ell grid");
  sw->add_option("--N", N, "polynomial degree N")->required();
  sw->add_option("--k", k, "branch index (0..floor(N/2))")->required();
  sw->add_option("--ell-range", range, "geometric grid lo:hi:points")->required();
  add_param_flags(sw, flags);
  sw->add_option("--precision", bits, "working precision in bits")->default_val(128);
  sw->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  sw->add_option("--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "re-check a previously emitted solve record");
  verify->add_option("file", verify_path, "path to a solve JSON record")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints usage to the appropriate stream
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(N, flags, bits, strategy, format, real_only, out_path);
    if (asym->parsed()) return run_asymptotic(N, flags, format, out_path);
    if (sw->parsed()) return run_sweep(N, k, range, flags, bits, format, out_path);
    if (verify->parsed()) return run_verify(verify_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
