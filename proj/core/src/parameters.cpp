// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/parameters.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qes/precision.hpp"

namespace qes {

namespace {

BigInt pow10_int(size_t k) {
  BigInt v(1);
  for (size_t i = 0; i < k; ++i) v *= 10;
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&text]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };

  std::string s(text);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return fail();
    try {
      Rational r{BigInt(num), BigInt(den)};
      return r;
    } catch (const std::exception&) {
      return fail();
    }
  }

  // Decimal or scientific literal, converted exactly.
  std::string mantissa = s;
  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    std::string expstr = s.substr(e + 1);
    if (expstr.empty()) return fail();
    try {
      exp10 = std::stoll(expstr);
    } catch (const std::exception&) {
      return fail();
    }
  }
  if (mantissa.empty()) return fail();

  std::string digits = mantissa;
  size_t frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    frac_len = mantissa.size() - dot - 1;
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
  }
  if (digits.empty() || digits == "-" || digits == "+") return fail();
  bool negative = false;
  if (digits[0] == '-' || digits[0] == '+') {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  // Leading zeros would make the cpp_int constructor read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  if (digits.empty()) return fail();
  for (const char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return fail();

  BigInt m(digits);
  if (negative) m = -m;
  Rational r(m, pow10_int(frac_len));
  if (exp10 >= 0)
    r *= Rational(pow10_int(static_cast<size_t>(exp10)), 1);
  else
    r /= Rational(pow10_int(static_cast<size_t>(-exp10)), 1);
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  if (value == 0) return Rational(0);
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

InternalParameters internal_from_model(const ModelParameters& p) {
  const Rational half(1, 2);
  const Rational disc = p.G + (p.L + half) * (p.L + half);
  if (disc < 0) {
    throw std::domain_error(
        "effective angular momentum is complex: G + (L+1/2)^2 < 0 with G = " + to_string(p.G) +
        ", L = " + to_string(p.L));
  }

  InternalParameters ip;
  ip.beta = p.B / 2;
  ip.gamma = (ip.beta * ip.beta - p.C) / 2;
  if (auto root = exact_sqrt(disc)) {
    ip.ell = *root - half;
    ip.ell_exact = true;
  } else {
    const Float256 approx = sqrt(to_real<Float256>(disc)) - Float256(0.5);
    ip.ell = static_cast<Rational>(approx);
    ip.ell_exact = false;
  }
  return ip;
}

ModelParameters model_from_internal(const InternalParameters& ip, int N) {
  ModelParameters p;
  p.B = 2 * ip.beta;
  p.C = ip.beta * ip.beta - 2 * ip.gamma;
  p.G = ip.ell * (ip.ell + 1);
  p.L = 0;
  p.F = 0;
  p.D = d_coupling(ip.ell, ip.beta, ip.gamma, N);
  p.N = N;
  return p;
}

Rational d_coupling(const Rational& ell, const Rational& beta, const Rational& gamma, int N) {
  return 2 * (ell + beta * gamma - N - 1);
}

ModelParameters bbl_parameters(const Rational& a, const Rational& b, int N) {
  ModelParameters p;
  p.B = 2 * a;
  p.C = a * a - 2 * b;
  p.D = 2 * (a * b - N);
  p.F = 0;
  p.G = 0;
  p.L = 0;
  p.N = N;
  return p;
}

}  // namespace qes
