// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// binary exits nonzero if any criterion fails. Tolerances are fixed here,
// in code, and are not tunable from the command line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qes/asymptotic.hpp"
#include "qes/magyari.hpp"
#include "qes/oracle.hpp"
#include "qes/parameters.hpp"
#include "qes/solver.hpp"

using namespace qes;

namespace {

struct CriterionResult {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

using Runner = std::function<void(CriterionResult&)>;

bool run_criterion(int number, const std::string& name, double time_limit_s, const Runner& fn) {
  CriterionResult r;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0) r.require(seconds < time_limit_s, "runtime limit exceeded");
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", number,
              name.c_str(), seconds, r.detail.tellp() > 0 ? " -- " : "",
              r.detail.str().c_str());
  std::fflush(stdout);
  return r.pass;
}

double rel_dist(const Complex256& a, const Complex256& b) {
  return static_cast<double>((abs(a - b)) / (1 + abs(a) + abs(b)));
}

InternalParameters make_ip(Rational ell, Rational beta, Rational gamma) {
  InternalParameters ip;
  ip.ell = std::move(ell);
  ip.beta = std::move(beta);
  ip.gamma = std::move(gamma);
  return ip;
}

// Shared registry: solver-accepted solutions from criteria 3-5, re-checked
// by the polynomial-identity certificate in criterion 6.
struct RegisteredSolution {
  Rational ell, beta, gamma;
  int N = 0;
  Complex256 E, F;
  std::vector<Complex256> omega;
};
std::vector<RegisteredSolution> g_registry;

void register_solution(const Rational& ell, const Rational& beta, const Rational& gamma, int N,
                       const Complex256& E, const Complex256& F,
                       const std::vector<Complex256>& omega) {
  g_registry.push_back({ell, beta, gamma, N, E, F, omega});
}

// The rational panel for criteria 4, 5, 7, 8: (ell, beta, gamma).
std::vector<std::array<Rational, 3>> panel() {
  return {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(1, 2), Rational(1, 3)},
      {Rational(0), Rational(2), Rational(-1)},
      {Rational(0), Rational(-1, 3), Rational(1)},
      {Rational(1, 2), Rational(1, 3), Rational(1, 5)},
      {Rational(1, 2), Rational(1), Rational(-1, 2)},
      {Rational(1), Rational(1, 2), Rational(1, 2)},
      {Rational(1), Rational(0), Rational(1)},
      {Rational(5, 2), Rational(1, 2), Rational(1, 3)},
      {Rational(5, 2), Rational(-1), Rational(3, 4)},
      {Rational(5, 2), Rational(0), Rational(0)},
      {Rational(1), Rational(-1, 3), Rational(2, 5)},
  };
}

// Empirical correction exponents of |t(ell) - t_k|, frozen after the first
// run of this suite at beta = 1/2, gamma = 1/3 over ell in 1e2..1e6.
struct FrozenExponent {
  int N, k;
  double value;
};
const std::vector<FrozenExponent> kFrozenExponents = {
    {2, 0, -0.3333}, {2, 1, -0.3333}, {3, 0, -0.3333}, {3, 1, -0.3333}};

void criterion1(CriterionResult& r) {
  for (int N = 0; N <= 8; ++N) {
    std::vector<long long> expected;
    for (int k = 0; k <= N / 2; ++k) expected.push_back(N - 3LL * k);

    const auto ms = multiplets(N);
    std::vector<long long> from_multiplets;
    for (const auto& m : ms) from_multiplets.push_back(m.t);
    r.require(from_multiplets == expected, "multiplets(" + std::to_string(N) + ") wrong roots");

    const auto scan = rescaled_root_scan(N);
    r.require(scan.kernel_roots == expected, "scan(" + std::to_string(N) + ") wrong roots");
    r.require(!scan.extra_kernel_roots,
              "scan(" + std::to_string(N) + ") found a non-integer kernel root");
  }
}

void criterion2(CriterionResult& r) {
  for (int N = 0; N <= 8; ++N) {
    for (const auto& m : multiplets(N)) {
      const Rational t(m.t);
      const auto residual = rescaled_matrix<Rational>(N, t, t).apply(m.h);
      for (const auto& v : residual)
        r.require(v == 0, "kernel residual nonzero at N=" + std::to_string(N) +
                              ", k=" + std::to_string(m.k));
    }
  }
  const auto m2 = multiplets(2);
  r.require(m2[0].h == std::vector<Rational>{1, -2, 1}, "N=2 k=0 kernel is not (1,-2,1)");
  r.require(m2[1].h == std::vector<Rational>{1, 1, 1}, "N=2 k=1 kernel is not (1,1,1)");
}

void criterion3(CriterionResult& r) {
  const Rational beta(1, 2), gamma(1, 3);
  const std::vector<double> grid{1e2, 1e3, 1e4, 1e5, 1e6};
  for (int N : {2, 3}) {
    for (int k = 0; k <= N / 2; ++k) {
      const auto rec = sweep(beta, gamma, N, k, grid, Precision::bits128);
      const std::string tag = "N=" + std::to_string(N) + ",k=" + std::to_string(k);
      r.require(rec.complete && rec.points.size() == grid.size(), tag + ": branch lost");
      if (!rec.complete || rec.points.size() != grid.size()) continue;

      const Complex256 tk = Complex256(Float256(N - 3 * k));
      double prev_t = 1e300, prev_s = 1e300;
      for (const auto& p : rec.points) {
        const double dt = static_cast<double>(abs(p.t - tk));
        const double ds = static_cast<double>(abs(p.s - tk));
        r.require(dt < prev_t, tag + ": |t - t_k| not strictly decreasing");
        r.require(ds < prev_s, tag + ": |s - t_k| not strictly decreasing");
        prev_t = dt;
        prev_s = ds;
      }
      r.require(prev_t < 1e-1, tag + ": |t(1e6) - t_k| >= 0.1");

      r.require(rec.fitted_exponent.has_value(), tag + ": no fitted exponent");
      if (rec.fitted_exponent) {
        bool matched = false;
        for (const auto& f : kFrozenExponents)
          if (f.N == N && f.k == k)
            matched = std::abs(*rec.fitted_exponent - f.value) < 0.02;
        std::ostringstream note;
        note << tag << ": exponent " << *rec.fitted_exponent << " departs from frozen value";
        r.require(matched, note.str());
      }

      for (const auto& p : rec.points) {
        InternalParameters ip;
        ip.ell = static_cast<Rational>(p.ell);
        ip.beta = beta;
        ip.gamma = gamma;
        register_solution(ip.ell, beta, gamma, N, p.E, p.F, p.omega);
      }
    }
  }
}

void criterion4(CriterionResult& r) {
  SolveOptions opts;
  opts.precision = Precision::bits128;
  for (const auto& [ell, beta, gamma] : panel()) {
    for (int N = 0; N <= 3; ++N) {
      const auto ip = make_ip(ell, beta, gamma);
      const auto oracle = exact_solutions(ip, N);
      const auto report = solve_all(ip, N, opts);
      const std::string tag = "(ell=" + to_string(ell) + ",beta=" + to_string(beta) +
                              ",gamma=" + to_string(gamma) + ",N=" + std::to_string(N) + ")";
      r.require(report.solutions.size() == oracle.size(),
                tag + ": count " + std::to_string(report.solutions.size()) + " vs oracle " +
                    std::to_string(oracle.size()));
      if (report.solutions.size() != oracle.size()) continue;

      std::vector<bool> used(report.solutions.size(), false);
      for (const auto& ex : oracle) {
        int best = -1;
        double best_d = 1e300;
        for (size_t i = 0; i < report.solutions.size(); ++i) {
          if (used[i]) continue;
          const double d = rel_dist(report.solutions[i].E, ex.E) +
                           rel_dist(report.solutions[i].F, ex.F);
          if (d < best_d) { best_d = d; best = static_cast<int>(i); }
        }
        r.require(best >= 0 && best_d < 1e-10, tag + ": unmatched oracle solution");
        if (best >= 0) {
          used[best] = true;
          const auto& s = report.solutions[best];
          register_solution(ell, beta, gamma, N, s.E, s.F, s.omega);
        }
      }
    }
  }
}

void criterion5(CriterionResult& r) {
  // BBL specialization at ell = 0: every principal-branch solution has a
  // vanishing charge. Solutions with omega_0 = 0 are the second indicial
  // branch (series starting at (ix)^(2l+1)); they are required to be
  // labeled as such and are reported, not hidden.
  int principal = 0, shifted = 0;
  for (const auto& [ell, beta, gamma] : panel()) {
    if (ell != 0) continue;
    for (int N = 0; N <= 3; ++N) {
      const auto ip = make_ip(ell, beta, gamma);
      const auto report = solve_all(ip, N, {});
      for (const auto& s : report.solutions) {
        register_solution(ell, beta, gamma, N, s.E, s.F, s.omega);
        if (s.indicial_shift == 0) {
          ++principal;
          r.require(static_cast<double>(abs(s.F)) <
                        1e-10 * (1 + static_cast<double>(abs(s.E))),
                    "principal solution with nonzero F at ell=0");
        } else {
          ++shifted;
          r.require(s.indicial_shift == 1, "unclassified nonprincipal solution at ell=0");
        }
      }
    }
  }
  r.require(principal >= 10, "too few principal solutions exercised");
  r.detail << "[" << principal << " principal F=0, " << shifted
           << " labeled second-branch states]";
}

void criterion6(CriterionResult& r) {
  // Exact-rational fixture: the N=0 closed form certifies to literal zero.
  {
    const Rational ell = 3, beta = 1, gamma = 2;
    const Rational E = gamma * gamma - beta * (2 * ell - 1);
    const Rational F = 2 * gamma * ell;
    const Rational D = d_coupling(ell, beta, gamma, 0);
    const std::vector<Rational> omega{Rational(1)};
    auto cert = ode_certificate<Rational, Rational>(0, ell, beta, gamma, D, E, F, omega);
    r.require(cert.all_zero(), "rational fixture does not certify to exact zero");
    auto wrong = ode_certificate<Rational, Rational>(0, ell, beta, gamma, D + 1, E, F, omega);
    r.require(!wrong.all_zero(), "D+1 perturbation passed the certificate");
  }

  r.require(!g_registry.empty(), "no solutions registered by criteria 3-5");
  int checked = 0;
  for (const auto& s : g_registry) {
    const Float256 ell = to_real<Float256>(s.ell), beta = to_real<Float256>(s.beta),
                   gamma = to_real<Float256>(s.gamma);
    const Float256 D = to_real<Float256>(d_coupling(s.ell, s.beta, s.gamma, s.N));
    auto cert = ode_certificate<Complex256, Float256>(s.N, ell, beta, gamma, D, s.E, s.F, s.omega);
    if (!(cert.relative() < Float256(1e-10))) {
      r.require(false, "certificate failed for a registered solution (N=" + std::to_string(s.N) +
                           ", relative " + real_to_string(cert.relative(), 3) + ")");
    }
    // Spot-check sensitivity on a subset: D+1 must break the identity by an
    // absolute amount of order max|omega| (the injected term itself), which
    // stays detectable even when the certificate scale is huge (large ell).
    if (checked % 7 == 0) {
      auto bad = ode_certificate<Complex256, Float256>(s.N, ell, beta, gamma, D + 1, s.E, s.F,
                                                       s.omega);
      Float256 omega_max(0);
      for (const auto& o : s.omega) omega_max = std::max(omega_max, Float256(abs(o)));
      r.require(bad.max_abs > omega_max / 2, "D+1 perturbation passed on a solution");
    }
    ++checked;
  }
  r.detail << "[" << checked << " solutions certified]";
}

void criterion7(CriterionResult& r) {
  // Fixed point vs Newton from the same nearby seeds on panel solutions.
  int compared = 0;
  for (const auto& [ell, beta, gamma] : panel()) {
    for (int N = 0; N <= 2; ++N) {
      const auto ip = make_ip(ell, beta, gamma);
      for (const auto& ex : exact_solutions(ip, N)) {
        const Complex256 seed_E = ex.E + Complex256(Float256("1e-3")) * (1 + abs(ex.E));
        const Complex256 seed_F = ex.F + Complex256(Float256("5e-4")) * (1 + abs(ex.F));
        auto fp = fixed_point_search(ip, N, seed_E, seed_F);
        auto nw = newton_polish(ip, N, seed_E, seed_F);
        if (fp.solution && nw.solution) {
          ++compared;
          r.require(rel_dist(fp.solution->E, nw.solution->E) < 1e-8 &&
                        rel_dist(fp.solution->F, nw.solution->F) < 1e-8,
                    "methods disagree from a common seed");
        }
      }
    }
  }
  r.require(compared >= 10, "too few double-converged seeds (" + std::to_string(compared) + ")");

  // Analytic Jacobian against central differences on 100 random points.
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-2, 2);
  int checked = 0;
  while (checked < 100) {
    MagyariSystem<double> sys(3, std::abs(u(rng)) + 2.1, u(rng), u(rng));
    const std::complex<double> E(u(rng), u(rng)), F(u(rng), u(rng));
    auto jet = forward_eliminate_jet(sys, E, F, 64);
    if (jet.degenerate) continue;
    ++checked;
    const double h = 1e-6 * (1 + std::abs(E) + std::abs(F));
    auto at = [&](std::complex<double> e, std::complex<double> f) {
      return forward_eliminate(sys, e, f, 64);
    };
    const auto ep = at(E + h, F), em = at(E - h, F), fp = at(E, F + h), fm = at(E, F - h);
    const double mag = std::abs(jet.r1_de) + std::abs(jet.r1_df) + std::abs(jet.r2_de) +
                       std::abs(jet.r2_df) + 1e-300;
    const bool ok = std::abs(jet.r1_de - (ep.r1 - em.r1) / (2 * h)) / mag < 1e-6 &&
                    std::abs(jet.r1_df - (fp.r1 - fm.r1) / (2 * h)) / mag < 1e-6 &&
                    std::abs(jet.r2_de - (ep.r2 - em.r2) / (2 * h)) / mag < 1e-6 &&
                    std::abs(jet.r2_df - (fp.r2 - fm.r2) / (2 * h)) / mag < 1e-6;
    r.require(ok, "Jacobian mismatch at a random point");
  }
  r.detail << "[" << compared << " seed agreements, 100 Jacobian points]";
}

void criterion8(CriterionResult& r) {
  for (const auto& [ell, beta, gamma] : panel()) {
    for (int N = 1; N <= 3; ++N) {
      const auto ip = make_ip(ell, beta, gamma);
      const auto report = solve_all(ip, N, {});
      for (const auto& s : report.solutions) {
        const Complex256 ec = conj(s.E), fc = conj(s.F);
        bool partner = false, self = false;
        for (const auto& q : report.solutions) {
          const double d = rel_dist(q.E, ec) + rel_dist(q.F, fc);
          if (d < 1e-8) {
            partner = true;
            if (&q == &s) self = true;
            if (rel_dist(s.E, ec) + rel_dist(s.F, fc) < 1e-8) self = true;
          }
        }
        r.require(partner, "missing conjugate partner");
        const bool self_conjugate = rel_dist(s.E, ec) + rel_dist(s.F, fc) < 1e-8;
        r.require(s.real_flag == self_conjugate, "real flag inconsistent under conjugation");
        (void)self;
      }
    }
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "asymptotic multiplets match the exact root scan (N <= 8)", 1.0,
                       criterion1);
  all &= run_criterion(2, "exact kernel certificates for every multiplet (N <= 8)", 1.0,
                       criterion2);
  all &= run_criterion(3, "strong-core continuation converges in scaled coordinates", 10.0,
                       criterion3);
  all &= run_criterion(4, "solver matches the exact oracle bijectively (N <= 3 panel)", 30.0,
                       criterion4);
  all &= run_criterion(5, "charge vanishes at ell = 0 on the principal branch", 30.0, criterion5);
  all &= run_criterion(6, "polynomial-identity certificate on all accepted solutions", 30.0,
                       criterion6);
  all &= run_criterion(7, "method cross-agreement and Jacobian finite-difference check", 30.0,
                       criterion7);
  all &= run_criterion(8, "conjugation closure and reality flags", 30.0, criterion8);
  if (!all) std::printf("acceptance: FAILURES PRESENT\n");
  else std::printf("acceptance: all criteria passed\n");
  return all ? 0 : 1;
}
