// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "qes/parameters.hpp"
#include "qes/precision.hpp"
#include "qes/ratpoly.hpp"

namespace qes {

// ---------------------------------------------------------------------------
// Integration-contour geometry.
//
// Bound states live on a complex contour bent below the real axis, with
// asymptotes -rho*exp(+i*phi) on the left and +rho*exp(-i*phi) on the right.
// Along either ray the dominant exponential factor exp(-i x^3 / 3) behaves
// like exp(rate * rho^3) with rate = -sin(3*phi)/3.
// ---------------------------------------------------------------------------

struct ContourRay {
  enum class Side { left, right };
  Side side = Side::right;
  double phi = 0;  // wedge-valid rays have 0 < phi < pi/3
  double rho = 1;
};

/// Exponential rate coefficient Re[-(i/3)x^3]/rho^3 along a ray at angle
/// phi; negative means decay. Both sides give the same value.
inline double decay_rate(double phi) { return -std::sin(3 * phi) / 3; }
inline double decay_rate(const ContourRay& ray) { return decay_rate(ray.phi); }

/// True when the ray lies strictly inside the wedge where the wave function
/// is normalizable.
inline bool in_decay_wedge(double phi) {
  return phi > 0 && phi < std::acos(-1.0) / 3 && decay_rate(phi) < 0;
}

// ---------------------------------------------------------------------------
// Polynomial-identity certificate.
//
// Substituting psi(x) = exp(-i x^3/3 - b x^2/2 - i g x) * sum omega_n (ix)^(n-l)
// into the radial equation turns it, after the substitution y = ix, into a
// finite Laurent table in y: one coefficient per power y^(k-l-2). For a true
// QES solution every coefficient vanishes. The table is built mechanically
// from the transformed operators, with no reference to the banded recurrence,
// so it independently certifies the recurrence and the D(N) convention.
// ---------------------------------------------------------------------------

template <class S>
struct OdeCertificate {
  std::vector<S> table;  // coefficient of y^(k - ell - 2) at index k
  AbsType<S> max_abs{};
  AbsType<S> scale{};    // accumulated magnitude per power, maximized

  AbsType<S> relative() const { return scale > AbsType<S>(0) ? max_abs / scale : max_abs; }
  bool all_zero() const {
    for (const auto& v : table)
      if (!(v == S(0))) return false;
    return true;
  }
};

/// S is the working field: Rational for exact real inputs, a complex type
/// otherwise. SR is the type of the real model parameters.
template <class S, class SR>
OdeCertificate<S> ode_certificate(int N, const SR& ell, const SR& beta, const SR& gamma,
                                  const SR& D, const S& E, const S& F,
                                  const std::vector<S>& omega) {
  using std::abs;
  using Abs = AbsType<S>;
  if (static_cast<int>(omega.size()) != N + 1)
    throw std::invalid_argument("ode_certificate: omega must have length N+1");

  // Multiplier polynomial in y acting on u:
  //   phi_yy + phi_y^2 - y^4 - B y^3 - C y^2 + D y - E - F/y - l(l+1)/y^2
  // with phi(y) = y^3/3 + beta y^2/2 - gamma y, B = 2 beta, C = beta^2-2 gamma.
  const SR B = 2 * beta;
  const SR C = beta * beta - 2 * gamma;

  // phi_y = y^2 + beta y - gamma, as ascending coefficients.
  const SR phi_y[3] = {-gamma, beta, SR(1)};
  SR phi_y_sq[5] = {SR(0), SR(0), SR(0), SR(0), SR(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) phi_y_sq[i + j] += phi_y[i] * phi_y[j];

  // Laurent multiplier, powers -2..4 stored at index power+2.
  S mult[7] = {S(0), S(0), S(0), S(0), S(0), S(0), S(0)};
  mult[-2 + 2] = S(-(ell * (ell + 1)));
  mult[-1 + 2] = -F;
  mult[0 + 2] = S(phi_y_sq[0] + beta) - E;  // phi_yy contributes beta at y^0
  mult[1 + 2] = S(phi_y_sq[1] + 2 + D);     // phi_yy contributes 2y
  mult[2 + 2] = S(phi_y_sq[2] - C);
  mult[3 + 2] = S(phi_y_sq[3] - B);
  mult[4 + 2] = S(phi_y_sq[4] - 1);

  // Table over powers y^(k - ell - 2), k = 0..N+6.
  OdeCertificate<S> cert;
  const int size = N + 7;
  cert.table.assign(size, S(0));
  std::vector<Abs> magnitude(size, Abs(0));
  auto add = [&](int k, const S& v) {
    cert.table[k] += v;
    magnitude[k] += abs(v);
  };

  for (int n = 0; n <= N; ++n) {
    const S& on = omega[n];
    if (on == S(0)) continue;
    const SR p = SR(n) - ell;  // exponent of y for this term

    // u_yy at power (n - ell - 2) -> k = n.
    add(n, S(p * (p - 1)) * on);

    // 2 phi_y u_y: monomial y^j shifts the power to n - 1 + j -> k = n+1+j.
    for (int j = 0; j < 3; ++j) {
      const S term = S(2 * phi_y[j] * p) * on;
      add(n - 1 + j + 2, term);
    }

    // multiplier * u: power n + (j - 2) -> k = n + j.
    for (int j = 0; j < 7; ++j) add(n + j, mult[j] * on);
  }

  Abs omega_max(0);
  for (const auto& o : omega) {
    const Abs a = abs(o);
    if (a > omega_max) omega_max = a;
  }
  for (int k = 0; k < size; ++k) {
    const Abs a = abs(cert.table[k]);
    if (a > cert.max_abs) cert.max_abs = a;
    if (magnitude[k] > cert.scale) cert.scale = magnitude[k];
  }
  // Floor the scale with the solution magnitude: every individual term can
  // vanish at special parameter points (N = 0 solutions), where roundoff
  // would otherwise register as an order-one violation.
  const Abs floor = (1 + abs(E) + abs(F) + abs(S(D))) * omega_max;
  if (floor > cert.scale) cert.scale = floor;
  return cert;
}

// ---------------------------------------------------------------------------
// Exact finite-ell solutions for small N.
// ---------------------------------------------------------------------------

struct ExactSolution {
  Complex256 E{};
  Complex256 F{};
  std::vector<Complex256> omega;  // largest-magnitude entry normalized to 1
  int indicial_shift = 0;         // first nonzero coefficient index
  Float256 residual_norm{};       // relative residual of the full system
};

/// Every (E, F) pair at which the full banded system has a kernel, computed
/// by exact bivariate elimination (resultants over the rationals) and
/// root isolation at 256-bit precision. Requires rational parameters
/// (ip.ell_exact) and N <= 3.
std::vector<ExactSolution> exact_solutions(const InternalParameters& ip, int N);

// ---------------------------------------------------------------------------
// Exact scan of the rescaled system on the s = t slice.
// ---------------------------------------------------------------------------

struct RootScanResult {
  RatPoly top_minor;     // rows 0..N determinant, primitive integer form
  RatPoly bottom_minor;  // rows 1..N+1 determinant
  RatPoly common;        // gcd of the minors
  std::vector<IntegerRoot> top_roots, bottom_roots;
  RatPoly top_remainder, bottom_remainder;  // after integer-root extraction
  std::vector<long long> kernel_roots;          // common roots with a kernel, descending
  std::vector<std::vector<Rational>> kernels;   // exact kernel per root, h_0 = 1
  std::vector<long long> spurious_common_roots; // both minors vanish, no kernel
  // The minors can also share non-integer real roots (first at N = 3, the
  // pair t^2 - 3t - 6); each is kernel-checked at 256-bit precision.
  std::vector<double> spurious_real_common_roots;
  bool extra_kernel_roots = false;  // a non-integer common root had a kernel
};

/// Exact-arithmetic common-root scan of the two maximal minors of the
/// rescaled system at s = t, with every candidate verified against the full
/// rectangular system before it counts as a root. N <= 8.
RootScanResult rescaled_root_scan(int N);

}  // namespace qes
