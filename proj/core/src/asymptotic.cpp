// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/asymptotic.hpp"

#include <stdexcept>
#include <string>

namespace qes {

std::vector<AsymptoticMultiplet> multiplets(int N) {
  if (N < 0) throw std::invalid_argument("multiplets: N must be nonnegative");
  std::vector<AsymptoticMultiplet> out;
  out.reserve(static_cast<size_t>(N / 2) + 1);

  for (int k = 0; k <= N / 2; ++k) {
    AsymptoticMultiplet m;
    m.N = N;
    m.k = k;
    m.t = N - 3LL * k;
    const Rational t(m.t);

    // Rows 0..N-1 as a forward recurrence on the s = t slice.
    m.h.assign(static_cast<size_t>(N) + 1, Rational(0));
    m.h[0] = 1;
    for (int n = 0; n < N; ++n) {
      Rational acc = t * m.h[n];
      if (n >= 1) acc += t * m.h[n - 1];
      if (n >= 2) acc += Rational(N + 2 - n) * m.h[n - 2];
      m.h[n + 1] = -acc / (n + 1);
    }

    // Certify against the full system, surplus rows included. These roots
    // are exact integers, so anything nonzero is an implementation bug.
    const auto residual = rescaled_matrix<Rational>(N, t, t).apply(m.h);
    for (const auto& r : residual) {
      if (r != 0) {
        throw std::logic_error("multiplets: kernel certification failed at N=" +
                               std::to_string(N) + ", k=" + std::to_string(k));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace qes
