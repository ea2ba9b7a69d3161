// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/bipoly.hpp"

#include <stdexcept>

namespace qes {

BiPoly::BiPoly(Rational constant) {
  if (constant != 0) c_.assign(1, std::move(constant));
}

BiPoly BiPoly::var_e() {
  BiPoly p;
  p.ne_ = 1;
  p.nf_ = 0;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

BiPoly BiPoly::var_f() {
  BiPoly p;
  p.ne_ = 0;
  p.nf_ = 1;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

Rational BiPoly::coeff(int i, int j) const {
  if (is_zero() || i < 0 || j < 0 || i > ne_ || j > nf_) return Rational(0);
  return c_[static_cast<size_t>(j) * (ne_ + 1) + i];
}

void BiPoly::set(int i, int j, Rational v) {
  c_[static_cast<size_t>(j) * (ne_ + 1) + i] = std::move(v);
}

void BiPoly::trim() {
  int me = -1, mf = -1;
  for (int j = 0; j <= nf_; ++j)
    for (int i = 0; i <= ne_; ++i)
      if (coeff(i, j) != 0) { me = std::max(me, i); mf = std::max(mf, j); }
  if (me < 0) {
    ne_ = nf_ = 0;
    c_.clear();
    return;
  }
  std::vector<Rational> next(static_cast<size_t>(me + 1) * (mf + 1), Rational(0));
  for (int j = 0; j <= mf; ++j)
    for (int i = 0; i <= me; ++i) next[static_cast<size_t>(j) * (me + 1) + i] = coeff(i, j);
  ne_ = me;
  nf_ = mf;
  c_ = std::move(next);
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  BiPoly r;
  r.ne_ = std::max(ne_, o.ne_);
  r.nf_ = std::max(nf_, o.nf_);
  r.c_.assign(static_cast<size_t>(r.ne_ + 1) * (r.nf_ + 1), Rational(0));
  for (int j = 0; j <= r.nf_; ++j)
    for (int i = 0; i <= r.ne_; ++i) r.set(i, j, coeff(i, j) + o.coeff(i, j));
  r.trim();
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  BiPoly r;
  r.ne_ = ne_ + o.ne_;
  r.nf_ = nf_ + o.nf_;
  r.c_.assign(static_cast<size_t>(r.ne_ + 1) * (r.nf_ + 1), Rational(0));
  for (int j = 0; j <= nf_; ++j)
    for (int i = 0; i <= ne_; ++i) {
      const Rational& a = coeff(i, j);
      if (a == 0) continue;
      for (int l = 0; l <= o.nf_; ++l)
        for (int k = 0; k <= o.ne_; ++k) {
          const Rational& b = o.coeff(k, l);
          if (b == 0) continue;
          r.set(i + k, j + l, r.coeff(i + k, j + l) + a * b);
        }
    }
  r.trim();
  return r;
}

BiPoly BiPoly::operator*(const Rational& k) const {
  if (k == 0) return {};
  BiPoly r(*this);
  for (auto& v : r.c_) v *= k;
  return r;
}

BiPoly BiPoly::d_e() const {
  if (is_zero() || ne_ == 0) return {};
  BiPoly r;
  r.ne_ = ne_ - 1;
  r.nf_ = nf_;
  r.c_.assign(static_cast<size_t>(r.ne_ + 1) * (r.nf_ + 1), Rational(0));
  for (int j = 0; j <= nf_; ++j)
    for (int i = 1; i <= ne_; ++i) r.set(i - 1, j, coeff(i, j) * i);
  r.trim();
  return r;
}

BiPoly BiPoly::d_f() const {
  if (is_zero() || nf_ == 0) return {};
  BiPoly r;
  r.ne_ = ne_;
  r.nf_ = nf_ - 1;
  r.c_.assign(static_cast<size_t>(r.ne_ + 1) * (r.nf_ + 1), Rational(0));
  for (int j = 1; j <= nf_; ++j)
    for (int i = 0; i <= ne_; ++i) r.set(i, j - 1, coeff(i, j) * j);
  r.trim();
  return r;
}

std::vector<RatPoly> BiPoly::coeffs_in_f() const {
  std::vector<RatPoly> out;
  if (is_zero()) return out;
  out.reserve(nf_ + 1);
  for (int j = 0; j <= nf_; ++j) {
    std::vector<Rational> row(static_cast<size_t>(ne_) + 1);
    for (int i = 0; i <= ne_; ++i) row[i] = coeff(i, j);
    out.emplace_back(std::move(row));
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

RatPoly BiPoly::at_e(const Rational& e) const {
  std::vector<Rational> coeffs(static_cast<size_t>(nf_) + 1, Rational(0));
  for (int j = 0; j <= nf_; ++j) {
    Rational row(0);
    for (int i = ne_; i >= 0; --i) row = row * e + coeff(i, j);
    coeffs[j] = row;
  }
  return RatPoly(std::move(coeffs));
}

RatPoly resultant_f(const BiPoly& p, const BiPoly& q) {
  const std::vector<RatPoly> pf = p.coeffs_in_f();
  const std::vector<RatPoly> qf = q.coeffs_in_f();
  if (pf.empty() || qf.empty()) return {};
  const int dp = static_cast<int>(pf.size()) - 1;
  const int dq = static_cast<int>(qf.size()) - 1;

  if (dp == 0 && dq == 0)
    throw std::invalid_argument("resultant_f: both arguments constant in F");
  if (dq == 0) {
    RatPoly r(Rational(1));
    for (int i = 0; i < dp; ++i) r = r * qf[0];
    return r;
  }
  if (dp == 0) {
    RatPoly r(Rational(1));
    for (int i = 0; i < dq; ++i) r = r * pf[0];
    return r;
  }

  // Sylvester matrix in F; entries are polynomials in E.
  const int size = dp + dq;
  Mat<RatPoly> syl(size, size);
  int max_deg = 0;
  for (const auto& t : pf) max_deg = std::max(max_deg, t.degree());
  for (const auto& t : qf) max_deg = std::max(max_deg, t.degree());
  for (int r = 0; r < dq; ++r)
    for (int j = 0; j <= dp; ++j) syl(r, r + j) = pf[dp - j];
  for (int r = 0; r < dp; ++r)
    for (int j = 0; j <= dq; ++j) syl(dq + r, r + j) = qf[dq - j];

  return poly_mat_determinant(syl, size * max_deg);
}

}  // namespace qes
