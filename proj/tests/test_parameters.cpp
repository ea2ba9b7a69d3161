// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "qes/parameters.hpp"

using namespace qes;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("1e2") == Rational(100));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("internal_from_model basic maps") {
  ModelParameters p;
  p.B = 2;
  auto ip = internal_from_model(p);
  CHECK(ip.beta == Rational(1));
  CHECK(ip.gamma == Rational(1, 2));  // (1 - 0)/2

  ModelParameters q;
  q.G = Rational(3, 4);
  q.L = 0;
  CHECK(internal_from_model(q).ell == Rational(1, 2));

  ModelParameters z;  // G = L = 0
  CHECK(internal_from_model(z).ell == Rational(0));
  CHECK(internal_from_model(z).ell_exact);
}

TEST_CASE("internal_from_model rejects complex ell") {
  ModelParameters p;
  p.G = -10;
  p.L = 0;
  CHECK_THROWS_AS(internal_from_model(p), std::domain_error);
}

TEST_CASE("irrational ell is flagged and accurate") {
  ModelParameters p;
  p.G = 3;  // ell = sqrt(3 + 1/4) - 1/2, irrational
  auto ip = internal_from_model(p);
  CHECK_FALSE(ip.ell_exact);
  // ell(ell+1) = G + L(L+1) must hold to the stored accuracy.
  const double lhs = static_cast<double>(ip.ell) * (static_cast<double>(ip.ell) + 1);
  CHECK(lhs == doctest::Approx(3.0).epsilon(1e-15));

  // G = 2 is a disguised perfect square: ell = 1 exactly.
  ModelParameters q;
  q.G = 2;
  auto iq = internal_from_model(q);
  CHECK(iq.ell_exact);
  CHECK(iq.ell == Rational(1));
}

TEST_CASE("d_coupling fixtures") {
  CHECK(d_coupling(Rational(1), Rational(1), Rational(0), 0) == Rational(0));
  CHECK(d_coupling(Rational(0), Rational(0), Rational(0), 0) == Rational(-2));
  CHECK(d_coupling(Rational(1, 2), Rational(2), Rational(3), 4) == Rational(3));
}

TEST_CASE("bbl_parameters") {
  auto zero = bbl_parameters(0, 0, 0);
  CHECK(zero.B == 0);
  CHECK(zero.C == 0);
  CHECK(zero.D == 0);
  CHECK(zero.F == 0);
  CHECK(zero.G == 0);

  auto p = bbl_parameters(1, 1, 2);
  CHECK(p.B == 2);
  CHECK(p.C == -1);
  CHECK(p.D == -2);

  // Induced internal triple is (a, b, 0).
  auto ip = internal_from_model(bbl_parameters(3, 5, 1));
  CHECK(ip.beta == Rational(3));
  CHECK(ip.gamma == Rational(5));
  CHECK(ip.ell == Rational(0));
  CHECK(ip.ell_exact);
}

TEST_CASE("round trip and ell identity properties") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    InternalParameters ip;
    ip.beta = Rational(num(rng), den(rng));
    ip.gamma = Rational(num(rng), den(rng));
    ip.ell = Rational(std::abs(num(rng)), den(rng));
    auto mp = model_from_internal(ip, 2);
    auto back = internal_from_model(mp);
    CHECK(back.beta == ip.beta);   // identity on (B, C) implies identity here
    CHECK(back.gamma == ip.gamma);
    CHECK(mp.B == 2 * ip.beta);
    CHECK(mp.C == ip.beta * ip.beta - 2 * ip.gamma);
    // ell(ell+1) = G + L(L+1) with the L = 0 convention.
    CHECK(back.ell * (back.ell + 1) == mp.G);
  }
}
