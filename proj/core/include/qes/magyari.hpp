// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qes/linalg.hpp"
#include "qes/precision.hpp"

namespace qes {

// The termination conditions for a degree-N polynomial factor form an
// overcomplete banded system of N+2 rows acting on the N+1 coefficients
// omega_0..omega_N. Row n holds
//   U_n = (2l-n)(n+1)            at column n+1,
//   S_n(F) = F - 2g(l-n)         at column n,
//   T_n(E) = E - g^2 + b(2l-2n+1) at column n-1,
//   W_n = 2(N+2-n)               at column n-2,
// clipped to columns 0..N.
template <class RealT>
struct MagyariSystem {
  using Real = RealT;

  int N = 0;
  Real ell{};
  Real beta{};
  Real gamma{};

  MagyariSystem(int n, Real l, Real b, Real g)
      : N(n), ell(std::move(l)), beta(std::move(b)), gamma(std::move(g)) {
    if (n < 0) throw std::invalid_argument("MagyariSystem: N must be nonnegative");
  }

  int rows() const { return N + 2; }
  int cols() const { return N + 1; }

  Real u(int n) const { return (2 * ell - n) * (n + 1); }
  Real w(int n) const { return Real(2 * (N + 2 - n)); }

  template <class Scalar>
  Scalar s(int n, const Scalar& F) const {
    return F - 2 * gamma * (ell - n);
  }
  template <class Scalar>
  Scalar t(int n, const Scalar& E) const {
    return E - gamma * gamma + beta * (2 * ell - 2 * n + 1);
  }
};

enum class Band { U, S, T, W };

inline int band_column(Band band, int row) {
  switch (band) {
    case Band::U: return row + 1;
    case Band::S: return row;
    case Band::T: return row - 1;
    default: return row - 2;
  }
}

/// Evaluates one generator of the banded system. Throws std::out_of_range
/// when (row, band) addresses a cell outside the (N+2) x (N+1) footprint.
template <class Real, class Scalar>
Scalar entry(int row, Band band, const Scalar& E, const Scalar& F, const MagyariSystem<Real>& sys) {
  const int col = band_column(band, row);
  if (row < 0 || row > sys.N + 1 || col < 0 || col > sys.N)
    throw std::out_of_range("entry: (row, band) outside the matrix footprint");
  switch (band) {
    case Band::U: return Scalar(sys.u(row));
    case Band::S: return sys.s(row, F);
    case Band::T: return sys.t(row, E);
    default: return Scalar(sys.w(row));
  }
}

/// Dense (N+2) x (N+1) matrix of the termination conditions at (E, F).
template <class Real, class Scalar>
Mat<Scalar> assemble(const MagyariSystem<Real>& sys, const Scalar& E, const Scalar& F) {
  Mat<Scalar> m(sys.rows(), sys.cols());
  for (int n = 0; n < sys.rows(); ++n) {
    if (n + 1 <= sys.N) m(n, n + 1) = Scalar(sys.u(n));
    if (n <= sys.N) m(n, n) = sys.s(n, F);
    if (n - 1 >= 0 && n - 1 <= sys.N) m(n, n - 1) = sys.t(n, E);
    if (n - 2 >= 0) m(n, n - 2) = Scalar(sys.w(n));
  }
  return m;
}

/// Largest band-entry magnitude over the full footprint times the largest
/// |omega_n|; the natural scale for residual comparisons.
template <class Real, class Scalar>
AbsType<Scalar> elimination_scale(const MagyariSystem<Real>& sys, const Scalar& E, const Scalar& F,
                                  const std::vector<Scalar>& omega) {
  using std::abs;
  AbsType<Scalar> entry_max(0);
  for (int n = 0; n < sys.rows(); ++n) {
    if (n + 1 <= sys.N) entry_max = std::max(entry_max, abs(Scalar(sys.u(n))));
    if (n <= sys.N) entry_max = std::max(entry_max, abs(sys.s(n, F)));
    if (n >= 1) entry_max = std::max(entry_max, abs(sys.t(n, E)));
    if (n >= 2) entry_max = std::max(entry_max, abs(Scalar(sys.w(n))));
  }
  AbsType<Scalar> omega_max(0);
  for (const auto& o : omega) omega_max = std::max(omega_max, abs(o));
  return entry_max * omega_max;
}

template <class Scalar>
struct EliminationResult {
  bool degenerate = false;
  int degenerate_index = -1;      // n with |U_n| below the pivot threshold
  std::vector<Scalar> omega;      // omega_0 = 1 normalization
  Scalar r1{};                    // residual of row N
  Scalar r2{};                    // residual of row N+1
  AbsType<Scalar> scale{};        // see elimination_scale
};

/// Uses rows 0..N-1 as a forward recurrence for omega with omega_0 = 1 and
/// returns the two surplus-row residuals. (r1, r2) vanish exactly at a
/// QES-compatible (E, F) when no pivot degenerates. Half-integer ell with
/// 0 <= 2*ell <= N-1 makes U_{2l} vanish; that is reported as a degenerate
/// pivot and the caller must fall back to pivoted_kernel.
template <class Real, class Scalar>
EliminationResult<Scalar> forward_eliminate(const MagyariSystem<Real>& sys, const Scalar& E,
                                            const Scalar& F, int bits) {
  using std::abs;
  using Abs = AbsType<Scalar>;
  const Abs thresh = pivot_threshold<Abs>(bits);

  EliminationResult<Scalar> out;
  out.omega.assign(sys.N + 1, Scalar(0));
  out.omega[0] = Scalar(1);

  auto term = [&](int n, const std::vector<Scalar>& om) -> Scalar {
    Scalar acc = sys.s(n, F) * om[n];
    if (n >= 1) acc += sys.t(n, E) * om[n - 1];
    if (n >= 2) acc += Scalar(sys.w(n)) * om[n - 2];
    return acc;
  };

  for (int n = 0; n < sys.N; ++n) {
    const Scalar un(sys.u(n));
    Abs row_scale = std::max(abs(un), abs(sys.s(n, F)));
    if (n >= 1) row_scale = std::max(row_scale, abs(sys.t(n, E)));
    if (n >= 2) row_scale = std::max(row_scale, abs(Scalar(sys.w(n))));
    row_scale = std::max(row_scale, Abs(1));
    if (abs(un) < thresh * row_scale) {
      out.degenerate = true;
      out.degenerate_index = n;
      return out;
    }
    out.omega[n + 1] = -term(n, out.omega) / un;
  }

  out.r1 = term(sys.N, out.omega);
  out.r2 = sys.t(sys.N + 1, E) * out.omega[sys.N];
  if (sys.N >= 1) out.r2 += Scalar(sys.w(sys.N + 1)) * out.omega[sys.N - 1];
  out.scale = elimination_scale(sys, E, F, out.omega);
  return out;
}

template <class Scalar>
struct EliminationJet {
  bool degenerate = false;
  int degenerate_index = -1;
  std::vector<Scalar> omega, omega_de, omega_df;
  Scalar r1{}, r2{};
  Scalar r1_de{}, r1_df{}, r2_de{}, r2_df{};
  AbsType<Scalar> scale{};
};

/// forward_eliminate with the partial derivatives with respect to E and F
/// carried through the recurrence (S' = 1 in F, T' = 1 in E).
template <class Real, class Scalar>
EliminationJet<Scalar> forward_eliminate_jet(const MagyariSystem<Real>& sys, const Scalar& E,
                                             const Scalar& F, int bits) {
  using std::abs;
  using Abs = AbsType<Scalar>;
  const Abs thresh = pivot_threshold<Abs>(bits);

  EliminationJet<Scalar> out;
  const int m = sys.N + 1;
  out.omega.assign(m, Scalar(0));
  out.omega_de.assign(m, Scalar(0));
  out.omega_df.assign(m, Scalar(0));
  out.omega[0] = Scalar(1);

  auto value = [&](int n) -> Scalar {
    Scalar acc = sys.s(n, F) * out.omega[n];
    if (n >= 1) acc += sys.t(n, E) * out.omega[n - 1];
    if (n >= 2) acc += Scalar(sys.w(n)) * out.omega[n - 2];
    return acc;
  };
  auto deriv_e = [&](int n) -> Scalar {
    Scalar acc = sys.s(n, F) * out.omega_de[n];
    if (n >= 1) acc += out.omega[n - 1] + sys.t(n, E) * out.omega_de[n - 1];
    if (n >= 2) acc += Scalar(sys.w(n)) * out.omega_de[n - 2];
    return acc;
  };
  auto deriv_f = [&](int n) -> Scalar {
    Scalar acc = out.omega[n] + sys.s(n, F) * out.omega_df[n];
    if (n >= 1) acc += sys.t(n, E) * out.omega_df[n - 1];
    if (n >= 2) acc += Scalar(sys.w(n)) * out.omega_df[n - 2];
    return acc;
  };

  for (int n = 0; n < sys.N; ++n) {
    const Scalar un(sys.u(n));
    Abs row_scale = std::max(abs(un), abs(sys.s(n, F)));
    if (n >= 1) row_scale = std::max(row_scale, abs(sys.t(n, E)));
    if (n >= 2) row_scale = std::max(row_scale, abs(Scalar(sys.w(n))));
    row_scale = std::max(row_scale, Abs(1));
    if (abs(un) < thresh * row_scale) {
      out.degenerate = true;
      out.degenerate_index = n;
      return out;
    }
    const Scalar de = deriv_e(n), df = deriv_f(n), v = value(n);
    out.omega[n + 1] = -v / un;
    out.omega_de[n + 1] = -de / un;
    out.omega_df[n + 1] = -df / un;
  }

  const int n1 = sys.N;
  out.r1 = value(n1);
  out.r1_de = deriv_e(n1);
  out.r1_df = deriv_f(n1);

  const int n2 = sys.N + 1;
  out.r2 = sys.t(n2, E) * out.omega[sys.N];
  out.r2_de = out.omega[sys.N] + sys.t(n2, E) * out.omega_de[sys.N];
  out.r2_df = sys.t(n2, E) * out.omega_df[sys.N];
  if (sys.N >= 1) {
    out.r2 += Scalar(sys.w(n2)) * out.omega[sys.N - 1];
    out.r2_de += Scalar(sys.w(n2)) * out.omega_de[sys.N - 1];
    out.r2_df += Scalar(sys.w(n2)) * out.omega_df[sys.N - 1];
  }
  out.scale = elimination_scale(sys, E, F, out.omega);
  return out;
}

/// Largest magnitude among the bands that do not depend on (E, F); these
/// entries cannot cancel at a solution and anchor numerical-rank decisions.
template <class Real>
Real structural_scale(const MagyariSystem<Real>& sys) {
  using std::abs;
  Real out(0);
  for (int n = 0; n < sys.rows(); ++n) {
    if (n + 1 <= sys.N) out = std::max(out, abs(sys.u(n)));
    if (n >= 2) out = std::max(out, abs(sys.w(n)));
  }
  return out;
}

/// Rank-revealing kernel extraction on the full rectangular system.
/// kernel_dim = 0 is a valid result; with kernel_dim >= 1 the returned
/// vector is normalized so its largest-magnitude entry is 1.
template <class Real, class Scalar>
KernelResult<Scalar> pivoted_kernel(const MagyariSystem<Real>& sys, const Scalar& E, const Scalar& F,
                                    int bits) {
  using std::abs;
  const AbsType<Scalar> anchor = 1 + abs(E) + abs(F) + AbsType<Scalar>(structural_scale(sys));
  auto res = pivoted_kernel_solve(assemble(sys, E, F), kernel_tolerance<AbsType<Scalar>>(bits), -1,
                                  anchor);
  if (!res.vector.empty()) {
    int imax = 0;
    AbsType<Scalar> best(0);
    for (int i = 0; i < static_cast<int>(res.vector.size()); ++i)
      if (abs(res.vector[i]) > best) { best = abs(res.vector[i]); imax = i; }
    const Scalar pivot = res.vector[imax];
    for (auto& v : res.vector) v /= pivot;
  }
  return res;
}

template <class Scalar>
struct ResidualReport {
  std::vector<Scalar> row_residuals;
  AbsType<Scalar> max_abs{};
  AbsType<Scalar> scale{};      // largest matrix entry times largest |omega_n|
  AbsType<Scalar> omega_max{};

  AbsType<Scalar> relative() const {
    return scale > AbsType<Scalar>(0) ? max_abs / scale : max_abs;
  }

  /// Residual over a scale floored by the solution magnitude. At N = 0 the
  /// whole matrix vanishes at a solution, so the raw entry scale would make
  /// any roundoff look like an order-one violation.
  AbsType<Scalar> relative_to(const Scalar& E, const Scalar& F) const {
    using std::abs;
    const AbsType<Scalar> floor = (1 + abs(E) + abs(F)) * omega_max;
    const AbsType<Scalar> s = scale > floor ? scale : floor;
    return s > AbsType<Scalar>(0) ? max_abs / s : max_abs;
  }
};

/// Residuals of the full system applied to a candidate coefficient vector.
template <class Real, class Scalar>
ResidualReport<Scalar> residual_report(const MagyariSystem<Real>& sys, const Scalar& E,
                                       const Scalar& F, const std::vector<Scalar>& omega) {
  using std::abs;
  if (static_cast<int>(omega.size()) != sys.N + 1)
    throw std::invalid_argument("residual_report: omega must have length N+1");
  ResidualReport<Scalar> rep;
  rep.row_residuals = assemble(sys, E, F).apply(omega);
  for (const auto& r : rep.row_residuals) rep.max_abs = std::max(rep.max_abs, abs(r));
  rep.scale = elimination_scale(sys, E, F, omega);
  for (const auto& o : omega) rep.omega_max = std::max(rep.omega_max, abs(o));
  return rep;
}

/// Index of the first coefficient that is not negligibly small relative to
/// the largest; 0 for a principal-branch vector, 2*ell+1 for kernels that
/// start on the second indicial branch.
template <class Scalar>
int support_start(const std::vector<Scalar>& omega, double rel_tol = 1e-8) {
  using std::abs;
  AbsType<Scalar> best(0);
  for (const auto& v : omega) best = std::max(best, abs(v));
  if (best == AbsType<Scalar>(0)) return 0;
  for (int i = 0; i < static_cast<int>(omega.size()); ++i)
    if (abs(omega[i]) > AbsType<Scalar>(rel_tol) * best) return i;
  return 0;
}

}  // namespace qes
