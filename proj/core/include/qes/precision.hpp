// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <iomanip>
#include <sstream>
#include <string>

#include "qes/rational.hpp"

namespace qes {

// Software floating-point tiers. 64 = hardware double, 128/256 = IEEE
// quad/oct binary formats emulated by Boost.Multiprecision.
enum class Precision { bits64 = 64, bits128 = 128, bits256 = 256 };

inline int precision_bits(Precision p) { return static_cast<int>(p); }

inline Precision precision_from_bits(int bits) {
  if (bits <= 64) return Precision::bits64;
  if (bits <= 128) return Precision::bits128;
  return Precision::bits256;
}

using Float128 = boost::multiprecision::cpp_bin_float_quad;
using Float256 = boost::multiprecision::cpp_bin_float_oct;
using Complex128 = boost::multiprecision::cpp_complex_quad;
using Complex256 = boost::multiprecision::cpp_complex_oct;

template <Precision P>
struct ScalarPolicy;

template <>
struct ScalarPolicy<Precision::bits64> {
  using Real = double;
  using Complex = std::complex<double>;
  static constexpr int bits = 64;
  static constexpr int max_digits10 = 17;
};

template <>
struct ScalarPolicy<Precision::bits128> {
  using Real = Float128;
  using Complex = Complex128;
  static constexpr int bits = 128;
  static constexpr int max_digits10 = 37;
};

template <>
struct ScalarPolicy<Precision::bits256> {
  using Real = Float256;
  using Complex = Complex256;
  static constexpr int bits = 256;
  static constexpr int max_digits10 = 73;
};

inline int max_digits10(Precision p) {
  switch (p) {
    case Precision::bits64: return ScalarPolicy<Precision::bits64>::max_digits10;
    case Precision::bits128: return ScalarPolicy<Precision::bits128>::max_digits10;
    default: return ScalarPolicy<Precision::bits256>::max_digits10;
  }
}

// Tolerances are anchored at the documented 64-bit values and tighten by
// a factor 10^(0.3) per extra precision bit.
inline double tolerance_exponent(double exp64, int bits) {
  return exp64 - 0.3 * (bits - 64);
}

template <class Real>
Real pow10(double e) {
  using std::pow;
  return static_cast<Real>(pow(Real(10), Real(e)));
}

/// Relative pivot threshold below which a diagonal-band pivot counts as a
/// structural zero (1e-10 at 64 bits).
template <class Real>
Real pivot_threshold(int bits) {
  return pow10<Real>(tolerance_exponent(-10.0, bits));
}

/// Relative numerical-rank cutoff for kernel extraction (1e-8 at 64 bits).
template <class Real>
Real kernel_tolerance(int bits) {
  return pow10<Real>(tolerance_exponent(-8.0, bits));
}

/// Residual acceptance threshold for stored solutions (1e-10 at 64 bits).
template <class Real>
Real residual_tolerance(int bits) {
  return pow10<Real>(tolerance_exponent(-10.0, bits));
}

template <class Real>
Real to_real(const Rational& r) {
  return static_cast<Real>(r);
}

template <class Complex, class Real = decltype(std::declval<Complex>().real())>
Complex to_complex(const Rational& r) {
  return Complex(to_real<Real>(r), Real(0));
}

template <class Complex>
auto abs1(const Complex& z) {
  using std::abs;
  return abs(z.real()) + abs(z.imag());
}

// Lossless complex widening/narrowing between precision tiers goes via the
// component type; Boost converts cpp_bin_float <-> double exactly when the
// value fits.
template <class To, class From>
To convert_complex(const From& z) {
  using R = decltype(std::declval<To>().real());
  return To(static_cast<R>(z.real()), static_cast<R>(z.imag()));
}

template <class Real>
std::string real_to_string(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace qes
