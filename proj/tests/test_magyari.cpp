// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <complex>
#include <random>

#include "qes/magyari.hpp"

using namespace qes;
using C = std::complex<double>;

namespace {
MagyariSystem<double> sys_of(int N, double ell, double beta, double gamma) {
  return MagyariSystem<double>(N, ell, beta, gamma);
}
}  // namespace

TEST_CASE("entry generator fixtures") {
  auto s2 = sys_of(3, 2.0, 0.0, 1.0);
  CHECK(entry(0, Band::U, C(0), C(0), s2) == C(4));           // (2*2-0)(0+1)
  CHECK(entry(0, Band::S, C(0), C(3), s2) == C(-1));          // 3 - 2*1*2
  auto s3 = sys_of(2, 0.5, 0.0, 0.0);
  CHECK(entry(2, Band::W, C(0), C(0), s3) == C(4));           // 2(2+2-2)

  CHECK_THROWS_AS(entry(5, Band::S, C(0), C(0), s3), std::out_of_range);
  CHECK_THROWS_AS(entry(0, Band::W, C(0), C(0), s3), std::out_of_range);   // column -2
  CHECK_THROWS_AS(entry(2, Band::U, C(0), C(0), s3), std::out_of_range);   // column 3 > N
}

TEST_CASE("assemble layout fixtures") {
  // N=0: 2x1 matrix [S_0(F); T_1(E)].
  auto s0 = sys_of(0, 1.5, 0.5, 2.0);
  const C E(3, 1), F(-2, 0.5);
  auto m0 = assemble(s0, E, F);
  CHECK(m0.rows() == 2);
  CHECK(m0.cols() == 1);
  CHECK(m0(0, 0) == s0.s(0, F));
  CHECK(m0(1, 0) == s0.t(1, E));

  // N=1: top-left block [[S_0, U_0], [T_1, S_1]].
  auto s1 = sys_of(1, 1.0, 0.25, -1.0);
  auto m1 = assemble(s1, E, F);
  CHECK(m1(0, 0) == s1.s(0, F));
  CHECK(m1(0, 1) == C(s1.u(0)));
  CHECK(m1(1, 0) == s1.t(1, E));
  CHECK(m1(1, 1) == s1.s(1, F));

  // N=2: last row [0, W_3, T_3] = [0, 2, T_3(E)].
  auto s2 = sys_of(2, 0.75, 1.0, 0.0);
  auto m2 = assemble(s2, E, F);
  CHECK(m2(3, 0) == C(0));
  CHECK(m2(3, 1) == C(2));
  CHECK(m2(3, 2) == s2.t(3, E));

  // W identities for every N >= 2.
  for (int N = 2; N <= 7; ++N) {
    auto s = sys_of(N, 0.3, 0.1, 0.2);
    CHECK(s.w(N + 1) == 2.0);
    CHECK(s.w(N) == 4.0);
  }
}

TEST_CASE("band identity: assemble reproduces entry everywhere") {
  auto s = sys_of(4, 1.25, -0.5, 0.75);
  const C E(0.3, -1.1), F(2.2, 0.4);
  auto m = assemble(s, E, F);
  for (int n = 0; n <= s.N + 1; ++n) {
    for (Band b : {Band::U, Band::S, Band::T, Band::W}) {
      const int col = band_column(b, n);
      if (col < 0 || col > s.N) continue;
      CHECK(m(n, col) == entry(n, b, E, F, s));
    }
  }
}

TEST_CASE("forward elimination N=0 closed forms") {
  auto s = sys_of(0, 2.0, 1.0, 3.0);
  const C E(0.7, 0.1), F(-1.2, 2.0);
  auto r = forward_eliminate(s, E, F, 64);
  REQUIRE_FALSE(r.degenerate);
  CHECK(r.omega.size() == 1);
  CHECK(r.omega[0] == C(1));
  CHECK(r.r1 == s.s(0, F));   // F - 2*gamma*ell
  CHECK(r.r2 == s.t(1, E));
}

TEST_CASE("forward elimination N=1 fixture") {
  // ell=1, beta=gamma=0, E=F=0: omega_1 = 0, R1 = 0, R2 = W_2 = 2.
  auto s = sys_of(1, 1.0, 0.0, 0.0);
  auto r = forward_eliminate(s, C(0), C(0), 64);
  REQUIRE_FALSE(r.degenerate);
  CHECK(r.omega[1] == C(0));
  CHECK(r.r1 == C(0));
  CHECK(r.r2 == C(2));
}

TEST_CASE("degenerate pivot signals at n = 2*ell") {
  auto s0 = sys_of(2, 0.0, 0.5, 0.5);  // U_0 = 0
  auto r0 = forward_eliminate(s0, C(1), C(1), 64);
  CHECK(r0.degenerate);
  CHECK(r0.degenerate_index == 0);

  for (double two_ell : {0.0, 1.0, 2.0, 3.0}) {
    const int N = 5;
    if (two_ell > N - 1) continue;
    auto s = sys_of(N, two_ell / 2, 0.3, -0.2);
    auto r = forward_eliminate(s, C(0.1, 0.2), C(-0.3, 0.1), 64);
    CHECK(r.degenerate);
    CHECK(r.degenerate_index == static_cast<int>(two_ell));
  }
}

TEST_CASE("pivoted kernel fixtures") {
  // N=0 at the closed-form solution: the matrix vanishes entirely.
  auto s = sys_of(0, 2.0, 1.0, 3.0);
  const C E_star(3 * 3 - 1 * (2 * 2 - 1), 0);  // gamma^2 - beta(2 ell - 1) = 6
  const C F_star(2.0 * 3 * 2, 0);              // 2 gamma ell = 12
  auto k = pivoted_kernel(s, E_star, F_star, 64);
  CHECK(k.kernel_dim == 1);
  REQUIRE(k.vector.size() == 1);
  CHECK(k.vector[0] == C(1));

  // Same system away from the solution: S_0 = -2 != 0, no kernel.
  auto s2 = sys_of(0, 1.0, 1.0, 1.0);
  auto k2 = pivoted_kernel(s2, C(0), C(0), 64);
  CHECK(k2.kernel_dim == 0);
}

TEST_CASE("ell=0, F=0: row 0 vanishes and the square tail decides") {
  auto s = sys_of(2, 0.0, 0.7, 1.3);
  auto m = assemble(s, C(0.4, 0), C(0));
  for (int c = 0; c <= s.N; ++c) CHECK(m(0, c) == C(0));
}

TEST_CASE("elimination and kernel agree at solutions") {
  // Regula-falsi-free check: at a root of (R1, R2) found by sampling Newton
  // externally we just confirm consistency between the two routes on the
  // N=0 closed form, plus residual acceptance.
  auto s = sys_of(0, 2.0, 1.0, 3.0);
  const C E_star(6, 0), F_star(12, 0);
  auto elim = forward_eliminate(s, E_star, F_star, 64);
  REQUIRE_FALSE(elim.degenerate);
  CHECK(std::abs(elim.r1) == 0.0);
  CHECK(std::abs(elim.r2) == 0.0);
  auto rep = residual_report(s, E_star, F_star, elim.omega);
  CHECK(rep.max_abs == 0.0);
}

TEST_CASE("residual report errors and properties") {
  auto s = sys_of(2, 1.0, 0.0, 1.0);
  std::vector<C> wrong_size(2, C(1));
  CHECK_THROWS_AS(residual_report(s, C(0), C(0), wrong_size), std::invalid_argument);

  std::vector<C> zero(3, C(0));
  auto rep = residual_report(s, C(1), C(1), zero);
  CHECK(rep.max_abs == 0.0);
  CHECK(rep.scale == 0.0);

  // Random omega at a generic non-QES point has a large relative residual.
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<C> random_omega{C(u(rng), u(rng)), C(u(rng), u(rng)), C(1, 0)};
  auto rep2 = residual_report(s, C(0.37, 0.11), C(-0.82, 0.21), random_omega);
  CHECK(rep2.relative() > 1e-8);
}

TEST_CASE("conjugation closure of the assembled matrix") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = sys_of(3, std::abs(u(rng)), u(rng), u(rng));
    const C E(u(rng), u(rng)), F(u(rng), u(rng));
    auto m = assemble(s, E, F);
    auto mc = assemble(s, std::conj(E), std::conj(F));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) CHECK(mc(i, j) == std::conj(m(i, j)));
  }
}

TEST_CASE("elimination/kernel cosine consistency at a sampled solution") {
  // Solve R1 = R2 = 0 for N=1 via a tiny Newton here, then compare omega
  // from elimination with the pivoted kernel vector.
  auto s = sys_of(1, 1.0, 0.5, 0.25);
  C E(0.2, 0.1), F(0.1, -0.2);
  for (int it = 0; it < 60; ++it) {
    auto jet = forward_eliminate_jet(s, E, F, 64);
    REQUIRE_FALSE(jet.degenerate);
    const C det = jet.r1_de * jet.r2_df - jet.r1_df * jet.r2_de;
    if (std::abs(det) == 0.0) break;
    const C de = (jet.r1 * jet.r2_df - jet.r2 * jet.r1_df) / det;
    const C df = (jet.r1_de * jet.r2 - jet.r2_de * jet.r1) / det;
    E -= de;
    F -= df;
    if (std::abs(de) + std::abs(df) < 1e-15 * (1 + std::abs(E) + std::abs(F))) break;
  }
  auto elim = forward_eliminate(s, E, F, 64);
  CHECK(std::abs(elim.r1) + std::abs(elim.r2) < 1e-10 * elim.scale);
  auto kern = pivoted_kernel(s, E, F, 64);
  REQUIRE(kern.kernel_dim >= 1);
  // Cosine distance between the two vectors.
  C dot(0);
  double na = 0, nb = 0;
  for (size_t i = 0; i < elim.omega.size(); ++i) {
    dot += elim.omega[i] * std::conj(kern.vector[i]);
    na += std::norm(elim.omega[i]);
    nb += std::norm(kern.vector[i]);
  }
  CHECK(1.0 - std::abs(dot) / std::sqrt(na * nb) < 1e-8);
}
