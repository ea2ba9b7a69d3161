// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qes/linalg.hpp"
#include "qes/magyari.hpp"
#include "qes/precision.hpp"
#include "qes/rational.hpp"

namespace qes {

/// Deviations of the spectral pair from its large-ell growth, in the scaled
/// coordinates F = 2*gamma*ell + 2s*ell^(2/3), E = -2*beta*ell + 2t*ell^(1/3).
template <class Complex>
struct ScaledCoordinates {
  Complex s{};
  Complex t{};
};

template <class Real, class Complex>
ScaledCoordinates<Complex> scaled_coordinates(const Complex& E, const Complex& F, const Real& ell,
                                              const Real& beta, const Real& gamma) {
  using std::pow;
  if (!(ell > Real(0))) throw std::domain_error("scaled_coordinates: ell must be positive");
  const Real third = Real(1) / Real(3);
  ScaledCoordinates<Complex> sc;
  sc.s = (F - 2 * gamma * ell) / (2 * pow(ell, 2 * third));
  sc.t = (E + 2 * beta * ell) / (2 * pow(ell, third));
  return sc;
}

/// The ell-free limit system: row n carries (N+2-n) at column n-2, t at
/// column n-1, s at column n and (n+1) at column n+1, clipped to 0..N.
template <class Scalar>
Mat<Scalar> rescaled_matrix(int N, const Scalar& s, const Scalar& t) {
  if (N < 0) throw std::invalid_argument("rescaled_matrix: N must be nonnegative");
  Mat<Scalar> m(N + 2, N + 1);
  for (int n = 0; n < N + 2; ++n) {
    if (n - 2 >= 0) m(n, n - 2) = Scalar(N + 2 - n);
    if (n - 1 >= 0 && n - 1 <= N) m(n, n - 1) = t;
    if (n <= N) m(n, n) = s;
    if (n + 1 <= N) m(n, n + 1) = Scalar(n + 1);
  }
  return m;
}

/// One integer root t_k = N - 3k of the rescaled system on the s = t slice,
/// with the exact kernel vector h (h_0 = 1).
struct AsymptoticMultiplet {
  int N = 0;
  int k = 0;
  long long t = 0;
  std::vector<Rational> h;
};

/// All floor(N/2)+1 multiplets. Every kernel is certified against the two
/// surplus rows in exact arithmetic; failure there is a logic error.
std::vector<AsymptoticMultiplet> multiplets(int N);

/// Leading-order spectral pair on branch k:
///   E = -2*beta*ell + 2(N-3k) ell^(1/3),  F = 2*gamma*ell + 2(N-3k) ell^(2/3).
template <class Real>
std::pair<Real, Real> asymptotic_spectrum(int N, int k, const Real& ell, const Real& beta,
                                          const Real& gamma) {
  using std::pow;
  if (k < 0 || k > N / 2) throw std::out_of_range("asymptotic_spectrum: k must lie in 0..floor(N/2)");
  if (!(ell > Real(0))) throw std::domain_error("asymptotic_spectrum: ell must be positive");
  const Real third = Real(1) / Real(3);
  const Real tk = Real(N - 3 * k);
  const Real E = -2 * beta * ell + 2 * tk * pow(ell, third);
  const Real F = 2 * gamma * ell + 2 * tk * pow(ell, 2 * third);
  return {E, F};
}

/// Maps a kernel of the rescaled system back to wave-function coefficients,
/// omega_n = h_n ell^(-n/3), renormalized to largest-entry 1.
template <class Real>
std::vector<Real> omega_from_h(const AsymptoticMultiplet& mult, const Real& ell) {
  using std::abs;
  using std::pow;
  if (!(ell > Real(0))) throw std::domain_error("omega_from_h: ell must be positive");
  const Real third = Real(1) / Real(3);
  std::vector<Real> omega(mult.h.size());
  for (size_t n = 0; n < mult.h.size(); ++n)
    omega[n] = to_real<Real>(mult.h[n]) * pow(ell, -Real(static_cast<int>(n)) * third);
  Real best(0);
  size_t imax = 0;
  for (size_t n = 0; n < omega.size(); ++n)
    if (abs(omega[n]) > best) { best = abs(omega[n]); imax = n; }
  const Real pivot = omega[imax];
  for (auto& o : omega) o /= pivot;
  return omega;
}

/// Checks entrywise that the full system at the scaled spectral pair,
/// column-scaled by ell^(-c/3) and row-scaled by 1/(2 ell^((2-n)/3)),
/// approaches the rescaled system. Returns the max entrywise deviation,
/// which decays like ell^(-1/3).
template <class Real, class Complex>
Real reduce_full_to_rescaled(int N, const Real& ell, const Real& beta, const Real& gamma,
                             const Complex& s, const Complex& t) {
  using std::abs;
  using std::pow;
  Real limit = Real(N);
  limit = std::max(limit, abs(beta));
  limit = std::max(limit, abs(gamma));
  if (!(ell > 100 * limit) || !(ell > Real(0)))
    throw std::domain_error("reduce_full_to_rescaled: need ell > 100*max(N, |beta|, |gamma|)");

  const Real third = Real(1) / Real(3);
  const Complex E = Complex(-2 * beta * ell) + t * (2 * pow(ell, third));
  const Complex F = Complex(2 * gamma * ell) + s * (2 * pow(ell, 2 * third));

  const MagyariSystem<Real> sys(N, ell, beta, gamma);
  const Mat<Complex> full = assemble(sys, E, F);
  const Mat<Complex> target = rescaled_matrix(N, s, t);

  Real dev(0);
  for (int n = 0; n < full.rows(); ++n) {
    const Real row_scale = 2 * pow(ell, (Real(2) - n) * third);
    for (int c = 0; c < full.cols(); ++c) {
      const Complex scaled = full(n, c) * pow(ell, -Real(c) * third) / row_scale;
      dev = std::max(dev, abs(scaled - target(n, c)));
    }
  }
  return dev;
}

}  // namespace qes
