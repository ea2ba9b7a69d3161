// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/roots.hpp"

#include <boost/math/constants/constants.hpp>

#include <stdexcept>

namespace qes {

namespace {

constexpr int kMaxIterations = 600;

std::vector<Complex256> durand_kerner(std::vector<Complex256> c) {
  using std::abs;
  using std::pow;

  // Trim negligible leading coefficients.
  Float256 cmax(0);
  for (const auto& v : c) cmax = std::max(cmax, abs(v));
  if (cmax == 0) return {};
  while (c.size() > 1 && abs(c.back()) < cmax * Float256(1e-60)) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};

  for (auto& v : c) v /= c.back();
  if (n == 1) return {-c[0]};

  Float256 radius(0);
  for (int i = 0; i < n; ++i) radius = std::max(radius, abs(c[i]));
  radius = 1 + radius;

  const Float256 two_pi = 2 * boost::math::constants::pi<Float256>();
  std::vector<Complex256> w(n);
  for (int j = 0; j < n; ++j) {
    // Spread over a circle with an irrational-ish phase offset so no start
    // point sits on a symmetry axis of the root set.
    const Float256 angle = two_pi * j / n + Float256(0.37);
    w[j] = radius * Complex256(cos(angle), sin(angle));
  }

  auto eval = [&](const Complex256& x) {
    Complex256 acc(0);
    for (int i = n; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  };

  const Float256 tol("1e-64");
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Float256 worst(0);
    for (int j = 0; j < n; ++j) {
      Complex256 denom(1);
      for (int k = 0; k < n; ++k)
        if (k != j) denom *= (w[j] - w[k]);
      if (abs(denom) == 0) {
        w[j] += Complex256(Float256("1e-40") * radius, Float256("3e-41") * radius);
        worst = radius;
        continue;
      }
      const Complex256 delta = eval(w[j]) / denom;
      w[j] -= delta;
      worst = std::max(worst, abs(delta));
    }
    if (worst < tol * radius) break;
  }
  return w;
}

}  // namespace

std::vector<Complex256> complex_roots(std::vector<Complex256> coeffs) {
  return durand_kerner(std::move(coeffs));
}

std::vector<Complex256> complex_roots(const RatPoly& p) {
  const RatPoly q = squarefree_part(p).primitive_integer();
  if (q.degree() <= 0) return {};

  std::vector<Complex256> c(q.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = scalar_from_rational<Complex256>(q.coeffs()[i]);
  std::vector<Complex256> roots = durand_kerner(c);

  // Newton polish against the exact coefficients.
  const RatPoly dq = q.derivative();
  for (auto& r : roots) {
    for (int it = 0; it < 8; ++it) {
      const Complex256 f = q.eval(r);
      const Complex256 df = dq.eval(r);
      if (abs(df) == 0) break;
      const Complex256 step = f / df;
      r -= step;
      if (abs(step) < Float256("1e-68") * (1 + abs(r))) break;
    }
  }
  return roots;
}

}  // namespace qes
