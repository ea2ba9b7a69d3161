// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qes/rational.hpp"

namespace qes {

/// Couplings of the potential
///   V(x) = -x^4 + iB x^3 + C x^2 + iD x + iF/x + G/x^2
/// together with the partial-wave index L and the polynomial degree N.
/// D and F are determined by the quasi-exact-solvability conditions and are
/// carried here only so a full coupling set can be echoed; solvers treat
/// them as outputs.
struct ModelParameters {
  Rational B = 0;
  Rational C = 0;
  Rational D = 0;
  Rational F = 0;
  Rational G = 0;
  Rational L = 0;  // must satisfy L >= -1/2
  int N = 0;
};

/// The internal triple (beta, gamma, ell) used by the recurrence:
///   beta = B/2, gamma = (beta^2 - C)/2, ell = sqrt(G + (L+1/2)^2) - 1/2.
/// ell is stored exactly when the square root is rational; otherwise it is
/// the correctly rounded 256-bit value recorded as a rational, with
/// ell_exact = false. Exact-arithmetic consumers require ell_exact.
struct InternalParameters {
  Rational beta = 0;
  Rational gamma = 0;
  Rational ell = 0;
  bool ell_exact = true;
};

/// Throws std::domain_error when G + (L+1/2)^2 < 0 (ell would be complex).
InternalParameters internal_from_model(const ModelParameters& p);

/// Inverse map with the convention L = 0, F = 0 and D = d_coupling(...).
/// Requires an exact ell.
ModelParameters model_from_internal(const InternalParameters& ip, int N);

/// The coupling of the linear potential term that makes degree-N
/// termination possible: D(N) = 2(ell + beta*gamma - N - 1).
Rational d_coupling(const Rational& ell, const Rational& beta, const Rational& gamma, int N);

template <class Real>
Real d_coupling(const Real& ell, const Real& beta, const Real& gamma, int N) {
  return 2 * (ell + beta * gamma - N - 1);
}

/// The two-parameter quartic model: B = 2a, C = a^2 - 2b, D = 2(ab - N),
/// F = G = L = 0. The induced internal triple is (a, b, 0).
ModelParameters bbl_parameters(const Rational& a, const Rational& b, int N);

}  // namespace qes
