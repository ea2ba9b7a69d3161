// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qes/ratpoly.hpp"

namespace qes {

/// Dense bivariate polynomial over the rationals in the spectral variables
/// (E, F). Degrees stay tiny (at most N+1 in each variable for N <= 3).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Rational constant);

  static BiPoly var_e();
  static BiPoly var_f();

  int deg_e() const { return ne_; }
  int deg_f() const { return nf_; }
  bool is_zero() const { return c_.empty(); }

  Rational coeff(int i, int j) const;  // coefficient of E^i F^j

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rational& k) const;

  BiPoly d_e() const;
  BiPoly d_f() const;

  /// Coefficients as polynomials in E, indexed by the power of F.
  std::vector<RatPoly> coeffs_in_f() const;

  /// Partial evaluation E = e, leaving a univariate polynomial in F.
  RatPoly at_e(const Rational& e) const;

  template <class Complex>
  Complex eval(const Complex& E, const Complex& F) const {
    Complex acc(0);
    for (int j = nf_; j >= 0; --j) {
      Complex row(0);
      for (int i = ne_; i >= 0; --i) row = row * E + scalar_from_rational<Complex>(coeff(i, j));
      acc = acc * F + row;
    }
    return acc;
  }

  /// Coefficients of F^j evaluated at a complex E, ascending in j.
  template <class Complex>
  std::vector<Complex> f_coeffs_at(const Complex& E) const {
    std::vector<Complex> out(static_cast<size_t>(nf_) + 1, Complex(0));
    for (int j = 0; j <= nf_; ++j) {
      Complex row(0);
      for (int i = ne_; i >= 0; --i) row = row * E + scalar_from_rational<Complex>(coeff(i, j));
      out[j] = row;
    }
    return out;
  }

 private:
  void set(int i, int j, Rational v);
  void trim();

  int ne_ = 0;  // degree in E of the storage grid
  int nf_ = 0;  // degree in F of the storage grid
  std::vector<Rational> c_;  // (ne_+1) x (nf_+1) grid, E-major
};

/// Resultant with respect to F, an exact polynomial in E. By convention
/// Res_F(P, Q) = Q^deg_F(P) when deg_F(Q) = 0 (and symmetrically); both
/// arguments constant in F is rejected.
RatPoly resultant_f(const BiPoly& p, const BiPoly& q);

}  // namespace qes
