// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "qes/bipoly.hpp"
#include "qes/magyari.hpp"
#include "qes/roots.hpp"

namespace qes {

namespace {

// Sum of |c_ij| |E|^i |F|^j, a magnitude scale for residual thresholds.
Float256 magnitude_bound(const BiPoly& p, const Float256& ea, const Float256& fa) {
  Float256 acc(0);
  for (int j = 0; j <= p.deg_f(); ++j) {
    Float256 row(0);
    for (int i = p.deg_e(); i >= 0; --i)
      row = row * ea + static_cast<Float256>(abs(scalar_from_rational<Complex256>(p.coeff(i, j))));
    Float256 fj(1);
    for (int t = 0; t < j; ++t) fj *= fa;
    acc += row * fj;
  }
  return acc;
}

struct CandidatePoint {
  Complex256 E, F;
};

void newton_polish_pair(const BiPoly& phi, const BiPoly& psi, Complex256& E, Complex256& F) {
  const BiPoly phi_e = phi.d_e(), phi_f = phi.d_f();
  const BiPoly psi_e = psi.d_e(), psi_f = psi.d_f();
  for (int it = 0; it < 80; ++it) {
    const Complex256 r1 = phi.eval(E, F), r2 = psi.eval(E, F);
    const Complex256 a = phi_e.eval(E, F), b = phi_f.eval(E, F);
    const Complex256 c = psi_e.eval(E, F), d = psi_f.eval(E, F);
    const Complex256 det = a * d - b * c;
    if (abs(det) == 0) return;
    const Complex256 de = (r1 * d - r2 * b) / det;
    const Complex256 df = (a * r2 - c * r1) / det;
    E -= de;
    F -= df;
    if (abs(de) + abs(df) < Float256("1e-62") * (1 + abs(E) + abs(F))) break;
  }
}

/// Isolated common zeros of two exact bivariate polynomials, by resultant
/// elimination of F followed by per-root back-substitution. Points are
/// polished on the exact pair; the caller must still verify them against
/// the full system, since common minor zeros can fail to be kernel points.
std::vector<CandidatePoint> common_zeros(const BiPoly& phi, const BiPoly& psi) {
  if (phi.is_zero() || psi.is_zero())
    throw std::runtime_error("common_zeros: a condition polynomial vanishes identically");
  if (phi.deg_f() == 0 && psi.deg_f() == 0)
    throw std::runtime_error("common_zeros: F does not appear in either condition");

  const RatPoly eliminant = resultant_f(phi, psi);
  if (eliminant.is_zero())
    throw std::runtime_error("common_zeros: conditions share a component (zero resultant)");
  if (eliminant.degree() == 0) return {};

  std::vector<CandidatePoint> out;
  for (const Complex256& e : complex_roots(eliminant)) {
    std::vector<Complex256> fs;
    for (const BiPoly* src : {&phi, &psi}) {
      if (src->deg_f() == 0) continue;
      for (const Complex256& f : complex_roots(src->f_coeffs_at(e))) fs.push_back(f);
    }
    for (const Complex256& f : fs) {
      CandidatePoint p{e, f};
      newton_polish_pair(phi, psi, p.E, p.F);
      const Float256 ea = abs(p.E), fa = abs(p.F);
      const Float256 scale = 1 + magnitude_bound(phi, ea, fa) + magnitude_bound(psi, ea, fa);
      if (abs(phi.eval(p.E, p.F)) + abs(psi.eval(p.E, p.F)) > Float256("1e-45") * scale) continue;
      bool dup = false;
      for (const auto& q : out) {
        if (abs(p.E - q.E) + abs(p.F - q.F) < Float256("1e-30") * (1 + abs(q.E) + abs(q.F))) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back(p);
    }
  }
  return out;
}

// Symbolic forward elimination. omega_n = a_n + tau * b_n, where tau is the
// free coefficient that appears when the superdiagonal pivot U_m vanishes.
// In the nondegenerate case all b_n stay zero.
struct SymbolicTracks {
  std::vector<BiPoly> a, b;
  BiPoly r1_a, r1_b, r2_a, r2_b;  // surplus-row residuals per track
  BiPoly pivot_condition;         // row m residual (degenerate case only)
  int m = -1;                     // degenerate index, -1 when none
};

SymbolicTracks symbolic_elimination(const Rational& ell, const Rational& beta,
                                    const Rational& gamma, int N) {
  SymbolicTracks tr;

  const Rational two_ell = 2 * ell;
  if (boost::multiprecision::denominator(two_ell) == 1 && two_ell >= 0 && two_ell <= N - 1)
    tr.m = static_cast<int>(boost::multiprecision::numerator(two_ell));

  auto u_n = [&](int n) { return (two_ell - n) * (n + 1); };
  auto s_n = [&](int n) { return BiPoly::var_f() + BiPoly(-2 * gamma * (ell - n)); };
  auto t_n = [&](int n) {
    return BiPoly::var_e() + BiPoly(-gamma * gamma + beta * (2 * ell - 2 * n + 1));
  };
  auto w_n = [&](int n) { return BiPoly(Rational(2 * (N + 2 - n))); };

  tr.a.assign(N + 1, BiPoly());
  tr.b.assign(N + 1, BiPoly());
  tr.a[0] = BiPoly(Rational(1));

  auto row_term = [&](int n, const std::vector<BiPoly>& om) {
    BiPoly acc = s_n(n) * om[n];
    if (n >= 1) acc = acc + t_n(n) * om[n - 1];
    if (n >= 2) acc = acc + w_n(n) * om[n - 2];
    return acc;
  };

  for (int n = 0; n < N; ++n) {
    if (n == tr.m) {
      tr.pivot_condition = row_term(n, tr.a);  // b-track is still zero here
      tr.b[n + 1] = BiPoly(Rational(1));
      continue;
    }
    const Rational inv = Rational(-1) / u_n(n);
    tr.a[n + 1] = row_term(n, tr.a) * inv;
    tr.b[n + 1] = row_term(n, tr.b) * inv;
  }

  tr.r1_a = row_term(N, tr.a);
  tr.r1_b = row_term(N, tr.b);

  tr.r2_a = t_n(N + 1) * tr.a[N];
  tr.r2_b = t_n(N + 1) * tr.b[N];
  if (N >= 1) {
    tr.r2_a = tr.r2_a + w_n(N + 1) * tr.a[N - 1];
    tr.r2_b = tr.r2_b + w_n(N + 1) * tr.b[N - 1];
  }
  return tr;
}

}  // namespace

std::vector<ExactSolution> exact_solutions(const InternalParameters& ip, int N) {
  if (!ip.ell_exact)
    throw std::invalid_argument("exact_solutions: requires an exact rational ell");
  if (N < 0 || N > 3)
    throw std::invalid_argument("exact_solutions: supported for 0 <= N <= 3 only");

  const SymbolicTracks tr = symbolic_elimination(ip.ell, ip.beta, ip.gamma, N);

  struct RawCandidate {
    Complex256 E, F;
    bool tail_branch = false;  // kernel starts at omega_{m+1}
  };
  std::vector<RawCandidate> raw;

  if (tr.m < 0) {
    for (const auto& p : common_zeros(tr.r1_a, tr.r2_a)) raw.push_back({p.E, p.F, false});
  } else {
    // Principal branch: omega_0 = 1 forces the row-m condition, and the two
    // surplus rows must admit a common value of the free coefficient tau.
    const BiPoly compat = tr.r1_a * tr.r2_b - tr.r2_a * tr.r1_b;
    for (const auto& p : common_zeros(tr.pivot_condition, compat)) raw.push_back({p.E, p.F, false});
    // Tail branch: omega_0..omega_m all vanish and omega_{m+1} = 1.
    for (const auto& p : common_zeros(tr.r1_b, tr.r2_b)) raw.push_back({p.E, p.F, true});
  }

  const MagyariSystem<Float256> sys(N, to_real<Float256>(ip.ell), to_real<Float256>(ip.beta),
                                    to_real<Float256>(ip.gamma));

  std::vector<ExactSolution> out;
  for (const auto& cand : raw) {
    std::vector<Complex256> omega(N + 1, Complex256(0));
    if (tr.m < 0) {
      for (int n = 0; n <= N; ++n) omega[n] = tr.a[n].eval(cand.E, cand.F);
    } else if (cand.tail_branch) {
      for (int n = 0; n <= N; ++n) omega[n] = tr.b[n].eval(cand.E, cand.F);
    } else {
      const Complex256 c1 = tr.r1_a.eval(cand.E, cand.F), d1 = tr.r1_b.eval(cand.E, cand.F);
      const Complex256 c2 = tr.r2_a.eval(cand.E, cand.F), d2 = tr.r2_b.eval(cand.E, cand.F);
      const Float256 scale = 1 + abs(c1) + abs(c2) + abs(d1) + abs(d2);
      Complex256 tau(0);
      if (abs(d1) >= abs(d2) && abs(d1) > Float256("1e-45") * scale)
        tau = -c1 / d1;
      else if (abs(d2) > Float256("1e-45") * scale)
        tau = -c2 / d2;
      else if (abs(c1) + abs(c2) > Float256("1e-45") * scale)
        continue;  // no tau can zero the surplus rows
      for (int n = 0; n <= N; ++n)
        omega[n] = tr.a[n].eval(cand.E, cand.F) + tau * tr.b[n].eval(cand.E, cand.F);
    }

    const auto report = residual_report(sys, cand.E, cand.F, omega);
    if (!(report.relative_to(cand.E, cand.F) < Float256("1e-40"))) continue;

    ExactSolution sol;
    sol.E = cand.E;
    sol.F = cand.F;
    int imax = 0;
    Float256 best(0);
    for (int i = 0; i <= N; ++i)
      if (abs(omega[i]) > best) { best = abs(omega[i]); imax = i; }
    if (best == 0) continue;
    const Complex256 norm = omega[imax];
    sol.omega.resize(N + 1);
    for (int i = 0; i <= N; ++i) sol.omega[i] = omega[i] / norm;
    sol.indicial_shift = support_start(sol.omega);
    sol.residual_norm = report.relative_to(cand.E, cand.F);

    bool dup = false;
    for (const auto& q : out) {
      if (abs(sol.E - q.E) + abs(sol.F - q.F) < Float256("1e-30") * (1 + abs(q.E) + abs(q.F))) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(sol));
  }

  std::sort(out.begin(), out.end(), [](const ExactSolution& x, const ExactSolution& y) {
    if (x.E.real() != y.E.real()) return x.E.real() < y.E.real();
    if (x.E.imag() != y.E.imag()) return x.E.imag() < y.E.imag();
    if (x.F.real() != y.F.real()) return x.F.real() < y.F.real();
    return x.F.imag() < y.F.imag();
  });
  return out;
}

}  // namespace qes
