// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/ratpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace qes {

namespace mp = boost::multiprecision;

RatPoly RatPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v = -v;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rational& k) const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= k;
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("RatPoly::divrem: division by zero polynomial");
  std::vector<Rational> rem(c_);
  const int dd = divisor.degree();
  const int dq = degree() - dd;
  if (dq < 0) return {RatPoly(), *this};
  std::vector<Rational> quo(static_cast<size_t>(dq) + 1, Rational(0));
  for (int i = dq; i >= 0; --i) {
    Rational f = rem[i + dd] / divisor.lead();
    quo[i] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= f * divisor.c_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / lead());
}

RatPoly RatPoly::primitive_integer() const {
  if (is_zero()) return {};
  BigInt den_lcm(1);
  for (const auto& v : c_) {
    const BigInt d = mp::denominator(v);
    den_lcm = mp::lcm(den_lcm, d);
  }
  std::vector<BigInt> ints(c_.size());
  BigInt content(0);
  for (size_t i = 0; i < c_.size(); ++i) {
    ints[i] = mp::numerator(c_[i]) * (den_lcm / mp::denominator(c_[i]));
    content = mp::gcd(content, ints[i]);
  }
  if (content == 0) content = 1;
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = Rational(ints[i] / content);
  return RatPoly(std::move(out));
}

Rational RatPoly::eval_rational(const Rational& x) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divrem(b).second;
    a = std::move(b);
    b = r.is_zero() ? RatPoly() : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 1) return p;
  const RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return p.divrem(g).first;
}

namespace {

// Deflates all factors (x - root) and returns the multiplicity.
int deflate_root(RatPoly& p, const BigInt& root) {
  const Rational r(root);
  int mult = 0;
  while (p.degree() >= 1 && p.eval_rational(r) == 0) {
    const RatPoly factor(std::vector<Rational>{-r, 1});
    p = p.divrem(factor).first;
    ++mult;
  }
  return mult;
}

}  // namespace

IntegerRootSplit integer_roots(const RatPoly& p) {
  IntegerRootSplit out;
  out.remainder = p.primitive_integer();
  if (p.degree() < 1) {
    out.remainder = p;
    return out;
  }

  if (const int m0 = deflate_root(out.remainder, 0); m0 > 0) out.roots.push_back({0, m0});
  if (out.remainder.degree() < 1) return out;

  // Any integer root divides the integer constant term; enumerate its
  // divisors (the Cauchy bound trims the large ones).
  const Rational c0_abs = abs(out.remainder.coeff(0));
  const BigInt c0 = mp::numerator(c0_abs);
  Rational maxratio(0);
  for (int i = 0; i < out.remainder.degree(); ++i) {
    Rational r = abs(out.remainder.coeff(i) / out.remainder.lead());
    if (r > maxratio) maxratio = r;
  }
  const BigInt bound = static_cast<BigInt>(maxratio) + 2;

  std::vector<BigInt> divisors;
  for (BigInt d = 1; d * d <= c0; ++d) {
    if (c0 % d != 0) continue;
    if (d <= bound) divisors.push_back(d);
    const BigInt q = c0 / d;
    if (q != d && q <= bound) divisors.push_back(q);
  }
  std::sort(divisors.begin(), divisors.end());

  for (const BigInt& d : divisors) {
    if (const int m = deflate_root(out.remainder, d); m > 0) out.roots.push_back({d, m});
    if (const int m = deflate_root(out.remainder, -d); m > 0) out.roots.push_back({-d, m});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const IntegerRoot& a, const IntegerRoot& b) { return a.root < b.root; });
  return out;
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_variations(const std::vector<RatPoly>& sturm, const Rational& x) {
  int variations = 0, prev = 0;
  for (const auto& p : sturm) {
    const int s = sign_of(p.eval_rational(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int count_real_roots(const RatPoly& p) {
  const RatPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  if (q.degree() == 1) return 1;

  std::vector<RatPoly> sturm{q, q.derivative()};
  while (sturm.back().degree() >= 1) {
    RatPoly r = sturm[sturm.size() - 2].divrem(sturm.back()).second;
    if (r.is_zero()) break;
    sturm.push_back(-r);
  }

  Rational maxratio(0);
  for (int i = 0; i < q.degree(); ++i) {
    Rational r = abs(q.coeff(i) / q.lead());
    if (r > maxratio) maxratio = r;
  }
  const Rational bound = maxratio + 2;
  return sign_variations(sturm, -bound) - sign_variations(sturm, bound);
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolate: need equally many points and values");

  // Newton divided differences.
  const size_t n = xs.size();
  std::vector<Rational> coef(ys);
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);

  RatPoly result(coef[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    const RatPoly shift(std::vector<Rational>{-xs[i], 1});
    result = result * shift + RatPoly(coef[i]);
  }
  return result;
}

RatPoly poly_mat_determinant(const Mat<RatPoly>& m, int degree_bound) {
  if (m.rows() != m.cols()) throw std::invalid_argument("poly_mat_determinant: square matrix required");
  std::vector<Rational> xs, ys;
  xs.reserve(degree_bound + 1);
  ys.reserve(degree_bound + 1);
  for (int p = 0; p <= degree_bound; ++p) {
    // Points 0, 1, -1, 2, -2, ...
    const int x = (p % 2 == 1) ? (p + 1) / 2 : -(p / 2);
    Mat<Rational> num(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) num(i, j) = m(i, j).eval_rational(Rational(x));
    xs.emplace_back(x);
    ys.push_back(gauss_determinant(std::move(num)));
  }
  return interpolate(xs, ys);
}

}  // namespace qes
