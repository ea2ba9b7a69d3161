// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "qes/linalg.hpp"
#include "qes/precision.hpp"
#include "qes/rational.hpp"

namespace qes {

template <class T>
T scalar_from_rational(const Rational& r) {
  return static_cast<T>(r);
}
template <>
inline std::complex<double> scalar_from_rational(const Rational& r) {
  return {static_cast<double>(r), 0.0};
}
template <>
inline Complex128 scalar_from_rational(const Rational& r) {
  return {static_cast<Float128>(r), Float128(0)};
}
template <>
inline Complex256 scalar_from_rational(const Rational& r) {
  return {static_cast<Float256>(r), Float256(0)};
}

/// Dense univariate polynomial over the rationals, coefficients ascending.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(Rational constant) : c_{std::move(constant)} { trim(); }
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RatPoly variable() { return RatPoly(std::vector<Rational>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rational& k) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divrem(const RatPoly& divisor) const;

  RatPoly derivative() const;
  RatPoly monic() const;

  /// Scales to integer coefficients with content 1 and positive lead.
  RatPoly primitive_integer() const;

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + scalar_from_rational<T>(c_[i]);
    return acc;
  }

  Rational eval_rational(const Rational& x) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic greatest common divisor (Euclid over the rational field).
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// p with all repeated factors reduced to multiplicity one.
RatPoly squarefree_part(const RatPoly& p);

struct IntegerRoot {
  BigInt root;
  int multiplicity = 0;
};

/// All integer roots with multiplicities (exhaustive scan within the Cauchy
/// bound), plus the deflated remainder.
struct IntegerRootSplit {
  std::vector<IntegerRoot> roots;
  RatPoly remainder;
};
IntegerRootSplit integer_roots(const RatPoly& p);

/// Number of distinct real roots (Sturm count over the whole line).
int count_real_roots(const RatPoly& p);

/// Exact polynomial through (x_i, y_i); the x_i must be pairwise distinct.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Determinant of a matrix with polynomial entries, computed exactly by
/// evaluation at degree_bound+1 integer points followed by interpolation.
RatPoly poly_mat_determinant(const Mat<RatPoly>& m, int degree_bound);

}  // namespace qes
