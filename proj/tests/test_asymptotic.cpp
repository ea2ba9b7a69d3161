// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <complex>

#include "qes/asymptotic.hpp"

using namespace qes;
using C = std::complex<double>;

TEST_CASE("rescaled matrix fixtures") {
  // N=0: [[s], [t]].
  auto m0 = rescaled_matrix<C>(0, C(2, 1), C(-1, 0));
  CHECK(m0.rows() == 2);
  CHECK(m0.cols() == 1);
  CHECK(m0(0, 0) == C(2, 1));
  CHECK(m0(1, 0) == C(-1, 0));

  // N=1: rows [s,1; t,s; 1,t].
  auto m1 = rescaled_matrix<C>(1, C(5), C(7));
  CHECK(m1(0, 0) == C(5));
  CHECK(m1(0, 1) == C(1));
  CHECK(m1(1, 0) == C(7));
  CHECK(m1(1, 1) == C(5));
  CHECK(m1(2, 0) == C(1));
  CHECK(m1(2, 1) == C(7));

  // N=2: rows [s,1,0; t,s,2; 2,t,s; 0,1,t].
  auto m2 = rescaled_matrix<C>(2, C(3), C(4));
  CHECK(m2(0, 0) == C(3));
  CHECK(m2(0, 1) == C(1));
  CHECK(m2(0, 2) == C(0));
  CHECK(m2(1, 0) == C(4));
  CHECK(m2(1, 1) == C(3));
  CHECK(m2(1, 2) == C(2));
  CHECK(m2(2, 0) == C(2));
  CHECK(m2(2, 1) == C(4));
  CHECK(m2(2, 2) == C(3));
  CHECK(m2(3, 0) == C(0));
  CHECK(m2(3, 1) == C(1));
  CHECK(m2(3, 2) == C(4));
}

TEST_CASE("multiplets fixtures") {
  auto m5 = multiplets(5);
  REQUIRE(m5.size() == 3);
  CHECK(m5[0].t == 5);
  CHECK(m5[1].t == 2);
  CHECK(m5[2].t == -1);

  auto m2 = multiplets(2);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0].t == 2);
  CHECK(m2[0].h == std::vector<Rational>{1, -2, 1});
  CHECK(m2[1].t == -1);
  CHECK(m2[1].h == std::vector<Rational>{1, 1, 1});

  auto m0 = multiplets(0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0].t == 0);
  CHECK(m0[0].h == std::vector<Rational>{1});
}

TEST_CASE("multiplet properties for N <= 10") {
  for (int N = 0; N <= 10; ++N) {
    auto ms = multiplets(N);
    CHECK(static_cast<int>(ms.size()) == N / 2 + 1);
    for (size_t i = 0; i < ms.size(); ++i) {
      CHECK(ms[i].t == N - 3 * static_cast<long long>(i));
      if (i > 0) CHECK(ms[i - 1].t - ms[i].t == 3);  // equidistance
      // Exact kernel certificate over all N+2 rows.
      const Rational t(ms[i].t);
      auto residual = rescaled_matrix<Rational>(N, t, t).apply(ms[i].h);
      for (const auto& r : residual) CHECK(r == 0);
    }
  }
}

TEST_CASE("asymptotic spectrum fixtures") {
  // t_1(3) = 0 annihilates both corrections when beta = gamma = 0.
  auto [e1, f1] = asymptotic_spectrum<double>(3, 1, 8.0, 0.0, 0.0);
  CHECK(e1 == 0.0);
  CHECK(f1 == 0.0);

  auto [e2, f2] = asymptotic_spectrum<double>(2, 0, 1000.0, 1.0, 0.0);
  CHECK(e2 == doctest::Approx(-1960.0).epsilon(1e-12));

  auto [e3, f3] = asymptotic_spectrum<double>(5, 2, 1.0, 0.0, 1.0);
  CHECK(f3 == doctest::Approx(0.0));

  CHECK_THROWS_AS(asymptotic_spectrum<double>(2, 2, 10.0, 0.0, 0.0), std::out_of_range);
  CHECK_THROWS_AS(asymptotic_spectrum<double>(2, 0, -1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("omega_from_h") {
  auto m0 = multiplets(0);
  CHECK(omega_from_h(m0[0], 123.0) == std::vector<double>{1.0});

  auto m2 = multiplets(2);  // k=0: h = (1, -2, 1)
  auto w1 = omega_from_h(m2[0], 1.0);
  // ell = 1: omega proportional to (1, -2, 1), normalized to largest entry 1.
  CHECK(w1[0] == doctest::Approx(-0.5));
  CHECK(w1[1] == doctest::Approx(1.0));
  CHECK(w1[2] == doctest::Approx(-0.5));

  auto w2 = omega_from_h(m2[0], 1e6);
  CHECK(w2[0] == doctest::Approx(1.0));
  CHECK(w2[1] == doctest::Approx(-0.02));
  CHECK(w2[2] == doctest::Approx(1e-4));
}

TEST_CASE("reduction to the rescaled system") {
  CHECK_THROWS_AS(reduce_full_to_rescaled(2, 10.0, 1.0, 1.0, C(1), C(1)), std::domain_error);

  // beta = gamma = 0, s = t = 0, N = 0: the deviation vanishes identically.
  CHECK(reduce_full_to_rescaled(0, 1e4, 0.0, 0.0, C(0), C(0)) == 0.0);

  // N=0 closed form: deviation is exactly |gamma^2 + beta| / (2 ell^(1/3)).
  const double ell = 1e5, beta = 0.5, gamma = 1.5;
  const double dev = reduce_full_to_rescaled(0, ell, beta, gamma, C(2), C(2));
  CHECK(dev == doctest::Approx((gamma * gamma + beta) / (2 * std::cbrt(ell))).epsilon(1e-12));

  // Deviation decreases monotonically in ell and is O(ell^(-1/3)).
  double prev = 1e300;
  for (double l : {1e3, 1e6, 1e9}) {
    const double d = reduce_full_to_rescaled(2, l, 1.0, 1.0, C(2), C(2));
    CHECK(d < prev);
    prev = d;
  }

  // Frozen regression value: N=2, ell=1e6, s=t=2, beta=gamma=1. The max
  // deviation comes from the T band of row 3, |beta(1-2n) - gamma^2| over
  // 2 ell^(1/3) = 6/200.
  const double frozen = reduce_full_to_rescaled(2, 1e6, 1.0, 1.0, C(2), C(2));
  CHECK(frozen < 1e-1);
  CHECK(frozen == doctest::Approx(0.03).epsilon(1e-9));
}
