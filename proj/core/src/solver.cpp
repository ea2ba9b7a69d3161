// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/solver.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qes/asymptotic.hpp"

namespace qes {

namespace {

Eigen::MatrixXcd to_eigen(const Mat<ComplexD>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<ComplexD> eigenvalues_of(const Eigen::MatrixXcd& m, const char* what) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error(std::string("eigensolver failed to converge in ") + what);
  std::vector<ComplexD> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) out[i] = es.eigenvalues()(i);
  return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Mat<ComplexD> top_matrix(const MagyariSystem<double>& sys, ComplexD E) {
  Mat<ComplexD> m(sys.N + 1, sys.N + 1);
  for (int n = 0; n <= sys.N; ++n) {
    m(n, n) = sys.s(n, ComplexD(0));
    if (n + 1 <= sys.N) m(n, n + 1) = sys.u(n);
    if (n >= 1) m(n, n - 1) = sys.t(n, E);
    if (n >= 2) m(n, n - 2) = sys.w(n);
  }
  return m;
}

Mat<ComplexD> bottom_matrix(const MagyariSystem<double>& sys, ComplexD F) {
  Mat<ComplexD> m(sys.N + 1, sys.N + 1);
  for (int n = 1; n <= sys.N + 1; ++n) {
    const int r = n - 1;
    m(r, r) = sys.t(n, ComplexD(0));
    if (n <= sys.N) m(r, n) = sys.s(n, F);
    if (n + 1 <= sys.N) m(r, n + 1) = sys.u(n);
    if (n - 2 >= 0) m(r, n - 2) = sys.w(n);
  }
  return m;
}

std::vector<ComplexD> charge_spectrum(const MagyariSystem<double>& sys, ComplexD E) {
  return eigenvalues_of(-to_eigen(top_matrix(sys, E)), "charge_spectrum");
}

std::vector<ComplexD> energy_spectrum(const MagyariSystem<double>& sys, ComplexD F) {
  return eigenvalues_of(-to_eigen(bottom_matrix(sys, F)), "energy_spectrum");
}

namespace {

// ---------------------------------------------------------------------------
// Precision-templated polishing kernel.
// ---------------------------------------------------------------------------

template <Precision P>
MagyariSystem<typename ScalarPolicy<P>::Real> make_system(const InternalParameters& ip, int N) {
  using Real = typename ScalarPolicy<P>::Real;
  return MagyariSystem<Real>(N, to_real<Real>(ip.ell), to_real<Real>(ip.beta),
                             to_real<Real>(ip.gamma));
}

struct PolishOutcome {
  bool converged = false;
  bool degenerate_pivot = false;
  bool singular_jacobian = false;
  int iterations = 0;
  Complex256 E{}, F{};
};

template <class Real, class Complex>
PolishOutcome newton_on_residuals(const MagyariSystem<Real>& sys, Complex E, Complex F, int bits) {
  using std::abs;
  PolishOutcome out;
  const Real accept = pow10<Real>(tolerance_exponent(-12.0, bits));
  const Real eps = std::numeric_limits<Real>::epsilon();

  for (int it = 0; it <= 80; ++it) {
    out.iterations = it;
    const auto jet = forward_eliminate_jet(sys, E, F, bits);
    if (jet.degenerate) {
      out.degenerate_pivot = true;
      return out;
    }
    const Real resid = abs(jet.r1) + abs(jet.r2);
    const Real scale = std::max(jet.scale, 1 + abs(E) + abs(F));
    if (resid <= accept * scale) {
      out.converged = true;
      break;
    }

    const Complex a = jet.r1_de, b = jet.r1_df, c = jet.r2_de, d = jet.r2_df;
    const Complex det = a * d - b * c;
    const Real fro2 = abs(a) * abs(a) + abs(b) * abs(b) + abs(c) * abs(c) + abs(d) * abs(d);
    if (abs(det) == Real(0) || fro2 / abs(det) > Real(1e12)) {
      out.singular_jacobian = true;
      return out;
    }
    const Complex de = (jet.r1 * d - jet.r2 * b) / det;
    const Complex df = (a * jet.r2 - c * jet.r1) / det;
    E -= de;
    F -= df;

    const Real move = abs(de) + abs(df);
    const Real span = 1 + abs(E) + abs(F);
    if (move > Real(1e10) * span) return out;  // diverged
    if (move < 4 * eps * span) {
      // Stalled at roundoff; accept only if the residual is already small.
      const auto check = forward_eliminate(sys, E, F, bits);
      if (!check.degenerate && abs(check.r1) + abs(check.r2) <=
                                   1000 * accept * std::max(check.scale, 1 + abs(E) + abs(F)))
        out.converged = true;
      break;
    }
  }

  out.E = convert_complex<Complex256>(E);
  out.F = convert_complex<Complex256>(F);
  return out;
}

// Newton on the bordered system [M(E,F) w; c^T w - 1] = 0 in (w, E, F).
// Works where forward elimination degenerates (U_{2l} = 0).
template <class Real, class Complex>
PolishOutcome bordered_newton(const MagyariSystem<Real>& sys, Complex E, Complex F, int bits) {
  using std::abs;
  PolishOutcome out;
  const int nw = sys.N + 1, rows = sys.N + 2, dim = nw + 2;
  const Real accept = pow10<Real>(tolerance_exponent(-12.0, bits));
  const Real eps = std::numeric_limits<Real>::epsilon();

  auto kern = pivoted_kernel_solve(assemble(sys, E, F), kernel_tolerance<Real>(bits));
  std::vector<Complex> w;
  if (kern.kernel_dim >= 1) {
    w = kern.vector;
  } else {
    auto forced = pivoted_kernel_solve(assemble(sys, E, F), AbsType<Complex>(0), nw - 1);
    w = forced.vector;
  }
  int anchor = 0;
  Real best(0);
  for (int i = 0; i < nw; ++i)
    if (abs(w[i]) > best) { best = abs(w[i]); anchor = i; }
  if (best == Real(0)) { w[0] = Complex(1); anchor = 0; }
  const Complex anchor_scale = w[anchor];
  for (auto& v : w) v /= anchor_scale;

  for (int it = 0; it <= 80; ++it) {
    out.iterations = it;
    const auto m = assemble(sys, E, F);
    std::vector<Complex> residual = m.apply(w);
    Real rmax(0);
    for (const auto& r : residual) rmax = std::max(rmax, abs(r));
    const Real scale = std::max(elimination_scale(sys, E, F, w), 1 + abs(E) + abs(F));
    if (rmax <= accept * scale) {
      out.converged = true;
      break;
    }

    Mat<Complex> jac(dim, dim);
    std::vector<Complex> rhs(dim, Complex(0));
    for (int r = 0; r < rows; ++r) {
      for (int cidx = 0; cidx < nw; ++cidx) jac(r, cidx) = m(r, cidx);
      // d(Mw)/dE hits the T band (column r-1), d(Mw)/dF the S band (column r).
      jac(r, nw) = (r >= 1 && r - 1 <= sys.N) ? w[r - 1] : Complex(0);
      jac(r, nw + 1) = (r <= sys.N) ? w[r] : Complex(0);
      rhs[r] = -residual[r];
    }
    for (int cidx = 0; cidx < nw; ++cidx) jac(rows, cidx) = (cidx == anchor) ? Complex(1) : Complex(0);
    jac(rows, nw) = Complex(0);
    jac(rows, nw + 1) = Complex(0);
    rhs[rows] = Complex(1) - w[anchor];

    std::vector<Complex> delta;
    if (!gauss_solve(jac, rhs, delta)) {
      out.singular_jacobian = true;
      return out;
    }
    Real move(0);
    for (int i = 0; i < nw; ++i) {
      w[i] += delta[i];
      move = std::max(move, abs(delta[i]));
    }
    E += delta[nw];
    F += delta[nw + 1];
    move = std::max(move, abs(delta[nw]) + abs(delta[nw + 1]));

    const Real span = 1 + abs(E) + abs(F);
    if (move > Real(1e10) * span) return out;
    if (move < 4 * eps * span) {
      const auto m2 = assemble(sys, E, F);
      auto res2 = m2.apply(w);
      Real r2max(0);
      for (const auto& r : res2) r2max = std::max(r2max, abs(r));
      if (r2max <= 1000 * accept * scale) out.converged = true;
      break;
    }
  }

  out.E = convert_complex<Complex256>(E);
  out.F = convert_complex<Complex256>(F);
  return out;
}

template <Precision P>
PolishOutcome polish_point(const InternalParameters& ip, int N, const Complex256& seed_E,
                           const Complex256& seed_F) {
  using Complex = typename ScalarPolicy<P>::Complex;
  const auto sys = make_system<P>(ip, N);
  const Complex E = convert_complex<Complex>(seed_E);
  const Complex F = convert_complex<Complex>(seed_F);
  auto out = newton_on_residuals(sys, E, F, ScalarPolicy<P>::bits);
  if (out.degenerate_pivot) {
    auto alt = bordered_newton(sys, E, F, ScalarPolicy<P>::bits);
    alt.degenerate_pivot = true;
    return alt;
  }
  return out;
}

PolishOutcome polish_point_at(Precision p, const InternalParameters& ip, int N,
                              const Complex256& seed_E, const Complex256& seed_F) {
  switch (p) {
    case Precision::bits64: return polish_point<Precision::bits64>(ip, N, seed_E, seed_F);
    case Precision::bits128: return polish_point<Precision::bits128>(ip, N, seed_E, seed_F);
    default: return polish_point<Precision::bits256>(ip, N, seed_E, seed_F);
  }
}

template <Precision P>
std::optional<QesSolution> finalize_solution(const InternalParameters& ip, int N,
                                             const Complex256& E256, const Complex256& F256,
                                             MethodTag method) {
  using Complex = typename ScalarPolicy<P>::Complex;
  constexpr int bits = ScalarPolicy<P>::bits;
  const auto sys = make_system<P>(ip, N);
  const Complex E = convert_complex<Complex>(E256);
  const Complex F = convert_complex<Complex>(F256);

  const auto kern = pivoted_kernel(sys, E, F, bits);
  if (kern.kernel_dim < 1 || kern.vector.empty()) return std::nullopt;
  const auto report = residual_report(sys, E, F, kern.vector);
  if (!(report.relative_to(E, F) < residual_tolerance<AbsType<Complex>>(bits)))
    return std::nullopt;

  QesSolution sol;
  sol.E = E256;
  sol.F = F256;
  sol.omega.reserve(kern.vector.size());
  for (const auto& v : kern.vector) sol.omega.push_back(convert_complex<Complex256>(v));
  sol.residual_norm = static_cast<Float256>(report.relative_to(E, F));
  sol.method = method;
  sol.precision_bits = bits;
  sol.kernel_dim = kern.kernel_dim;
  sol.indicial_shift = support_start(sol.omega);
  sol.real_flag = is_real_pair(sol.E, sol.F);
  return sol;
}

std::optional<QesSolution> finalize_at(Precision p, const InternalParameters& ip, int N,
                                       const Complex256& E, const Complex256& F, MethodTag method) {
  switch (p) {
    case Precision::bits64: return finalize_solution<Precision::bits64>(ip, N, E, F, method);
    case Precision::bits128: return finalize_solution<Precision::bits128>(ip, N, E, F, method);
    default: return finalize_solution<Precision::bits256>(ip, N, E, F, method);
  }
}

Precision next_tier(Precision p) {
  return p == Precision::bits64 ? Precision::bits128 : Precision::bits256;
}

// Severe-cancellation proxy: when the matrix entries dwarf the spectral
// values by 1e8, double-precision residuals cannot certify the solution.
bool wants_escalation(const QesSolution& sol, const InternalParameters& ip, int N) {
  const auto sys = make_system<Precision::bits64>(ip, N);
  const ComplexD E = convert_complex<ComplexD>(sol.E);
  const ComplexD F = convert_complex<ComplexD>(sol.F);
  std::vector<ComplexD> omega;
  omega.reserve(sol.omega.size());
  for (const auto& v : sol.omega) omega.push_back(convert_complex<ComplexD>(v));
  const double scale = elimination_scale(sys, E, F, omega);
  return scale > 1e8 * (1.0 + std::abs(E) + std::abs(F));
}

struct PipelineResult {
  std::optional<QesSolution> solution;
  bool escalated = false;
};

PipelineResult polish_and_verify(const InternalParameters& ip, int N, Complex256 seed_E,
                                 Complex256 seed_F, Precision precision, bool allow_escalation,
                                 MethodTag method) {
  PipelineResult result;
  Precision p = precision;
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto polished = polish_point_at(p, ip, N, seed_E, seed_F);
    if (polished.converged) {
      auto sol = finalize_at(p, ip, N, polished.E, polished.F, method);
      if (sol) {
        const bool cancellation = p == Precision::bits64 && allow_escalation &&
                                  wants_escalation(*sol, ip, N);
        if (!cancellation) {
          sol->escalated = result.escalated;
          result.solution = std::move(sol);
          return result;
        }
      }
    }
    if (!allow_escalation || p == Precision::bits256) return result;
    p = next_tier(p);
    result.escalated = true;
    if (polished.converged) {
      seed_E = polished.E;
      seed_F = polished.F;
    }
  }
  return result;
}

std::vector<ComplexD> cluster(std::vector<ComplexD> values, double rel) {
  std::vector<ComplexD> reps;
  for (const auto& v : values) {
    bool merged = false;
    for (const auto& r : reps) {
      if (std::abs(v - r) < rel * (1.0 + std::abs(r))) { merged = true; break; }
    }
    if (!merged) reps.push_back(v);
  }
  return reps;
}

bool same_pair(const QesSolution& a, const QesSolution& b) {
  return abs(a.E - b.E) + abs(a.F - b.F) < Float256(1e-8) * (1 + abs(b.E) + abs(b.F));
}

void sort_solutions(std::vector<QesSolution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const QesSolution& a, const QesSolution& b) {
    if (a.branch_k != b.branch_k) return a.branch_k < b.branch_k;
    const Float256 na = abs(a.E), nb = abs(b.E);
    if (na != nb) return na < nb;
    if (a.E.real() != b.E.real()) return a.E.real() < b.E.real();
    if (a.E.imag() != b.E.imag()) return a.E.imag() < b.E.imag();
    if (a.F.real() != b.F.real()) return a.F.real() < b.F.real();
    return a.F.imag() < b.F.imag();
  });
}

// ---------------------------------------------------------------------------
// Continuation in ell.
// ---------------------------------------------------------------------------

struct ContinuationState {
  bool alive = false;
  Complex256 E{}, F{};
  bool escalated = false;
};

double continuation_start(int N, const InternalParameters& ip) {
  const double m = std::max({static_cast<double>(N), std::abs(static_cast<double>(ip.beta)),
                             std::abs(static_cast<double>(ip.gamma))});
  return std::max(1e3, 100.0 * m);
}

Complex256 predict_E(const Rational& beta, double ell, const Complex256& t) {
  const Float256 l(ell);
  return Complex256(-2 * to_real<Float256>(beta) * l) + 2 * t * pow(l, Float256(1) / 3);
}

Complex256 predict_F(const Rational& gamma, double ell, const Complex256& s) {
  const Float256 l(ell);
  return Complex256(2 * to_real<Float256>(gamma) * l) + 2 * s * pow(l, Float256(2) / 3);
}

InternalParameters with_ell(const InternalParameters& ip, double ell) {
  InternalParameters out = ip;
  out.ell = static_cast<Rational>(Float256(ell));
  out.ell_exact = true;  // grid values are exact binary rationals
  return out;
}

// Walks one branch from ell_from down to ell_to; on success returns the
// polished pair at ell_to. Calls visit(ell, E, F) at every accepted stop.
template <class Visitor>
bool continue_branch(const InternalParameters& ip, int N, int k, double ell_from, double ell_to,
                     Precision precision, bool allow_escalation, ContinuationState& state,
                     Visitor&& visit) {
  const Rational& beta = ip.beta;
  const Rational& gamma = ip.gamma;

  if (!state.alive) {
    const auto [e0, f0] = asymptotic_spectrum<Float256>(N, k, Float256(ell_from),
                                                        to_real<Float256>(beta),
                                                        to_real<Float256>(gamma));
    auto polished = polish_and_verify(with_ell(ip, ell_from), N, Complex256(e0), Complex256(f0),
                                      precision, allow_escalation, MethodTag::newton);
    if (!polished.solution) return false;
    state.alive = true;
    state.E = polished.solution->E;
    state.F = polished.solution->F;
    state.escalated |= polished.escalated;
    visit(ell_from, *polished.solution);
  }

  double ell = ell_from;
  double ratio = 0.8;
  int failures_at_floor = 0;
  while (ell > ell_to * (1 + 1e-12)) {
    const double next = std::max(ell_to, ell * ratio);
    const auto sc = scaled_coordinates(state.E, state.F, Float256(ell), to_real<Float256>(beta),
                                       to_real<Float256>(gamma));
    const Complex256 seed_E = predict_E(beta, next, sc.t);
    const Complex256 seed_F = predict_F(gamma, next, sc.s);
    auto polished = polish_and_verify(with_ell(ip, next), N, seed_E, seed_F, precision,
                                      allow_escalation, MethodTag::newton);
    if (polished.solution) {
      ell = next;
      state.E = polished.solution->E;
      state.F = polished.solution->F;
      state.escalated |= polished.escalated;
      visit(ell, *polished.solution);
      continue;
    }
    if (ratio >= 0.99) {
      if (++failures_at_floor >= 2) return false;
    } else {
      ratio = std::min(0.99, std::sqrt(ratio));
    }
  }
  return true;
}

std::optional<double> fit_exponent(const SweepRecord& rec, long long t_k) {
  if (rec.points.size() < 2) return std::nullopt;
  const double ell_max = static_cast<double>(rec.points.back().ell);
  std::vector<double> xs, ys;
  for (const auto& p : rec.points) {
    const double ell = static_cast<double>(p.ell);
    if (ell < ell_max / 100.0 * (1 - 1e-9)) continue;
    const double dev = static_cast<double>(abs(p.t - Complex256(Float256(t_k))));
    if (dev <= 0) continue;
    xs.push_back(std::log10(ell));
    ys.push_back(std::log10(dev));
  }
  if (xs.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double n = static_cast<double>(xs.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

std::optional<MethodTag> method_from_string(const std::string& s) {
  if (s == "fixed-point") return MethodTag::fixed_point;
  if (s == "newton") return MethodTag::newton;
  if (s == "exact-elimination") return MethodTag::exact_elimination;
  return std::nullopt;
}

FixedPointResult fixed_point_search(const InternalParameters& ip, int N, Complex256 seed_E,
                                    Complex256 seed_F, int max_iter) {
  FixedPointResult out;
  const auto sys = make_system<Precision::bits64>(ip, N);
  ComplexD E = convert_complex<ComplexD>(seed_E);
  ComplexD F = convert_complex<ComplexD>(seed_F);

  auto nearest = [](const std::vector<ComplexD>& values, ComplexD target) {
    ComplexD best = values.front();
    double dist = std::abs(values.front() - target);
    for (const auto& v : values) {
      const double d = std::abs(v - target);
      if (d < dist) { dist = d; best = v; }
    }
    return best;
  };
  auto apply_map = [&](ComplexD e, ComplexD f) {
    const ComplexD f_next = nearest(charge_spectrum(sys, e), f);
    const ComplexD e_next = nearest(energy_spectrum(sys, f_next), e);
    return std::pair{e_next, f_next};
  };
  auto tol_at = [](ComplexD e, ComplexD f) {
    return 1e-12 * (1 + std::abs(e) + std::abs(f));
  };
  // Componentwise Aitken extrapolation; falls back to the plain update when
  // the second difference is too small to divide by. The nearest-eigenvalue
  // map can be mildly expansive at large ell, where the extrapolated cycle
  // still converges.
  auto aitken = [](ComplexD x0, ComplexD x1, ComplexD x2) {
    const ComplexD d2 = x2 - 2.0 * x1 + x0;
    const ComplexD d1 = x1 - x0;
    if (std::abs(d2) < 1e-14 * std::abs(d1) || std::abs(d2) == 0) return x2;
    return x0 - d1 * d1 / d2;
  };

  // The mutual-coupling conditions are also satisfied at eigenvalue-branch
  // crossings that carry no joint kernel, so a converged iterate only
  // counts after kernel verification.
  auto accept = [&](ComplexD e, ComplexD f) {
    out.last_E = convert_complex<Complex256>(e);
    out.last_F = convert_complex<Complex256>(f);
    out.solution =
        finalize_at(Precision::bits64, ip, N, out.last_E, out.last_F, MethodTag::fixed_point);
    return out.solution.has_value();
  };

  while (out.iterations < max_iter) {
    const auto [e1, f1] = apply_map(E, F);
    ++out.iterations;
    const double move1 = std::abs(e1 - E) + std::abs(f1 - F);
    if (move1 < tol_at(e1, f1)) {
      if (accept(e1, f1)) return out;
      E = e1;
      F = f1;
      continue;
    }
    if (out.iterations >= max_iter) { E = e1; F = f1; break; }

    const auto [e2, f2] = apply_map(e1, f1);
    ++out.iterations;
    const double move2 = std::abs(e2 - e1) + std::abs(f2 - f1);
    if (move2 < tol_at(e2, f2)) {
      if (accept(e2, f2)) return out;
      E = e2;
      F = f2;
      continue;
    }

    if (move2 <= move1) {
      // Contracting: keep the literal alternating iteration.
      E = e2;
      F = f2;
      continue;
    }
    const ComplexD e_acc = aitken(E, e1, e2);
    const ComplexD f_acc = aitken(F, f1, f2);
    if (!std::isfinite(e_acc.real()) || !std::isfinite(e_acc.imag()) ||
        !std::isfinite(f_acc.real()) || !std::isfinite(f_acc.imag())) {
      E = e2;
      F = f2;
      continue;
    }
    E = e_acc;
    F = f_acc;
  }
  out.last_E = convert_complex<Complex256>(E);
  out.last_F = convert_complex<Complex256>(F);
  return out;
}

NewtonResult newton_polish(const InternalParameters& ip, int N, Complex256 seed_E,
                           Complex256 seed_F, Precision precision) {
  NewtonResult out;
  auto polished = polish_point_at(precision, ip, N, seed_E, seed_F);
  out.degenerate_pivot = polished.degenerate_pivot;
  out.singular_jacobian = polished.singular_jacobian;
  out.iterations = polished.iterations;
  if (polished.degenerate_pivot || polished.singular_jacobian || !polished.converged) return out;
  out.solution = finalize_at(precision, ip, N, polished.E, polished.F, MethodTag::newton);
  return out;
}

SolveReport solve_all(const InternalParameters& ip, int N, const SolveOptions& opts) {
  SolveReport report;

  if (opts.strategy == Strategy::scan) {
    if (N > 12)
      throw std::invalid_argument("solve_all(scan): tensor space too large beyond N = 12; "
                                  "use the continuation strategy");
    const auto sys = make_system<Precision::bits64>(ip, N);
    const int n1 = N + 1;

    Eigen::MatrixXcd a0 = to_eigen(top_matrix(sys, ComplexD(0)));
    Eigen::MatrixXcd b0 = to_eigen(bottom_matrix(sys, ComplexD(0)));
    Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(n1, n1);  // E-coefficient of the top block
    for (int n = 1; n <= N; ++n) a1(n, n - 1) = 1.0;
    Eigen::MatrixXcd b2 = Eigen::MatrixXcd::Zero(n1, n1);  // F-coefficient of the bottom block
    for (int n = 1; n <= N; ++n) b2(n - 1, n) = 1.0;
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n1, n1);

    // Operator determinants of the linear two-parameter problem; delta0 is
    // I - kron(a1, b2) up to sign, hence always invertible.
    const Eigen::MatrixXcd delta0 = kron(a1, b2) - kron(eye, eye);
    const Eigen::MatrixXcd delta1 = kron(eye, b0) - kron(a0, b2);
    const Eigen::MatrixXcd gamma1 = delta0.partialPivLu().solve(delta1);

    const auto e_candidates = cluster(eigenvalues_of(gamma1, "solve_all(scan)"), 1e-8);
    for (const ComplexD& e : e_candidates) {
      for (const ComplexD& f : charge_spectrum(sys, e)) {
        auto piped = polish_and_verify(ip, N, convert_complex<Complex256>(e),
                                       convert_complex<Complex256>(f), opts.precision,
                                       opts.allow_escalation, MethodTag::newton);
        if (!piped.solution) continue;
        QesSolution sol = std::move(*piped.solution);
        sol.branch_k = -1;
        bool dup = false;
        for (auto& existing : report.solutions)
          if (same_pair(sol, existing)) { dup = true; break; }
        if (!dup) report.solutions.push_back(std::move(sol));
      }
    }
    if (std::any_of(report.solutions.begin(), report.solutions.end(),
                    [](const QesSolution& s) { return s.escalated; }))
      report.warnings.push_back("precision escalated beyond the requested tier");
    sort_solutions(report.solutions);
    return report;
  }

  // Continuation strategy.
  const double ell_target = static_cast<double>(ip.ell);
  if (!(ell_target > 0))
    throw std::domain_error("solve_all(continuation): requires ell > 0");
  for (int k = 0; k <= N / 2; ++k) {
    const double ell_start = std::max(continuation_start(N, ip), ell_target);
    ContinuationState state;
    QesSolution last;
    bool have_last = false;
    const bool ok = continue_branch(ip, N, k, ell_start, ell_target, opts.precision,
                                    opts.allow_escalation, state,
                                    [&](double, const QesSolution& sol) {
                                      last = sol;
                                      have_last = true;
                                    });
    if (!ok || !have_last) {
      report.warnings.push_back("branch k=" + std::to_string(k) +
                                " lost during continuation; partial result");
      continue;
    }
    last.branch_k = k;
    last.escalated = state.escalated;
    bool dup = false;
    for (auto& existing : report.solutions)
      if (same_pair(last, existing)) { dup = true; break; }
    if (!dup) report.solutions.push_back(std::move(last));
  }
  if (std::any_of(report.solutions.begin(), report.solutions.end(),
                  [](const QesSolution& s) { return s.escalated; }))
    report.warnings.push_back("precision escalated beyond the requested tier");
  sort_solutions(report.solutions);
  return report;
}

SweepRecord sweep(const Rational& beta, const Rational& gamma, int N, int k,
                  const std::vector<double>& ell_grid, Precision precision) {
  if (ell_grid.empty()) throw std::invalid_argument("sweep: empty ell grid");
  for (size_t i = 0; i < ell_grid.size(); ++i) {
    if (!(ell_grid[i] > 0)) throw std::invalid_argument("sweep: grid entries must be positive");
    if (i > 0 && !(ell_grid[i] > ell_grid[i - 1]))
      throw std::invalid_argument("sweep: grid must be strictly increasing");
  }
  if (k < 0 || k > N / 2) throw std::out_of_range("sweep: k must lie in 0..floor(N/2)");

  SweepRecord rec;
  rec.N = N;
  rec.k = k;
  rec.precision_bits = precision_bits(precision);

  InternalParameters ip;
  ip.beta = beta;
  ip.gamma = gamma;
  ip.ell = 1;

  const Float256 beta256 = to_real<Float256>(beta);
  const Float256 gamma256 = to_real<Float256>(gamma);

  auto record_point = [&](double ell, const QesSolution& sol) {
    SweepPoint p;
    p.ell = Float256(ell);
    p.E = sol.E;
    p.F = sol.F;
    const auto sc = scaled_coordinates(sol.E, sol.F, Float256(ell), beta256, gamma256);
    p.s = sc.s;
    p.t = sc.t;
    p.residual_norm = sol.residual_norm;
    p.omega = sol.omega;
    rec.points.push_back(std::move(p));
  };

  ContinuationState state;
  double current = std::max(continuation_start(N, ip), ell_grid.back());
  for (size_t i = ell_grid.size(); i-- > 0;) {
    const double stop = ell_grid[i];
    bool grid_hit = false;
    const bool ok = continue_branch(ip, N, k, current, stop, precision, true, state,
                                    [&](double ell, const QesSolution& sol) {
                                      if (ell == stop) {
                                        record_point(ell, sol);
                                        grid_hit = true;
                                      }
                                    });
    if (!ok || !grid_hit) {
      rec.complete = false;
      break;
    }
    current = stop;
  }

  std::sort(rec.points.begin(), rec.points.end(),
            [](const SweepPoint& a, const SweepPoint& b) { return a.ell < b.ell; });
  if (rec.points.size() >= 2) rec.fitted_exponent = fit_exponent(rec, N - 3LL * k);
  return rec;
}

}  // namespace qes
