// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qes/linalg.hpp"
#include "qes/magyari.hpp"
#include "qes/parameters.hpp"
#include "qes/solution.hpp"

namespace qes {

using ComplexD = std::complex<double>;

/// Square slice of rows 0..N with the F-dependence stripped off the
/// diagonal: det(full rows 0..N at (E, F)) = det(top(E) + F*I).
Mat<ComplexD> top_matrix(const MagyariSystem<double>& sys, ComplexD E);

/// Square slice of rows 1..N+1 with the E-dependence stripped off its
/// diagonal: det(full rows 1..N+1 at (E, F)) = det(bottom(F) + E*I).
Mat<ComplexD> bottom_matrix(const MagyariSystem<double>& sys, ComplexD F);

/// The N+1 charges F that make rows 0..N singular at this E
/// (the spectrum of -top(E)). Throws on eigensolver failure.
std::vector<ComplexD> charge_spectrum(const MagyariSystem<double>& sys, ComplexD E);

/// The N+1 energies E that make rows 1..N+1 singular at this F.
std::vector<ComplexD> energy_spectrum(const MagyariSystem<double>& sys, ComplexD F);

struct FixedPointResult {
  std::optional<QesSolution> solution;
  int iterations = 0;
  Complex256 last_E{}, last_F{};
};

/// Alternating nearest-eigenvalue iteration of the two coupled square
/// problems, run in double precision. Declares convergence when successive
/// moves fall below 1e-12 * (1 + |E| + |F|).
FixedPointResult fixed_point_search(const InternalParameters& ip, int N, Complex256 seed_E,
                                    Complex256 seed_F, int max_iter = 200);

struct NewtonResult {
  std::optional<QesSolution> solution;
  bool degenerate_pivot = false;
  bool singular_jacobian = false;
  int iterations = 0;
};

/// 2-D Newton iteration on the two surplus-row residuals of forward
/// elimination, with the analytic Jacobian carried through the recurrence.
/// Accepts at |R1| + |R2| < 1e-12 * elimination scale. Degenerate pivots
/// and Jacobian condition numbers beyond 1e12 are signalled, not fixed.
NewtonResult newton_polish(const InternalParameters& ip, int N, Complex256 seed_E,
                           Complex256 seed_F, Precision precision = Precision::bits64);

enum class Strategy { continuation, scan };

struct SolveOptions {
  Strategy strategy = Strategy::scan;
  Precision precision = Precision::bits64;
  bool allow_escalation = true;
  int max_iterations = 200;
};

struct SolveReport {
  std::vector<QesSolution> solutions;
  std::vector<std::string> warnings;
};

/// All simultaneous (E, F) pairs at the parameters of ip.
///
/// scan: linearizes the coupled pair of square problems on the tensor
/// product space (the operator-determinant construction for two-parameter
/// eigenvalue problems), polishes every candidate and keeps the pairs at
/// which the full rectangular system genuinely has a kernel. Complete over
/// the complex plane for moderate N.
///
/// continuation: seeds each branch k at large ell from the leading-order
/// spectra and tracks it down to the target ell in scaled coordinates,
/// with geometric steps (ratio 0.8, refined toward 0.99 on failures).
SolveReport solve_all(const InternalParameters& ip, int N, const SolveOptions& opts = {});

/// Branch continuation across an explicit ell grid, recording scaled
/// coordinates at every grid point and the fitted decay exponent of
/// |t(ell) - t_k| over the top two decades.
SweepRecord sweep(const Rational& beta, const Rational& gamma, int N, int k,
                  const std::vector<double>& ell_grid, Precision precision = Precision::bits128);

}  // namespace qes
