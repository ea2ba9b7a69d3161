// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "qes/asymptotic.hpp"
#include "qes/roots.hpp"

namespace qes {

namespace {

// The two maximal minors (rows 0..N and rows 1..N+1) of the rescaled
// system on the slice s = t, as exact polynomials in t.
std::pair<RatPoly, RatPoly> minor_pair(int N) {
  const RatPoly t = RatPoly::variable();

  auto entry = [&](int n, int c) -> RatPoly {
    if (c == n - 2 && c >= 0) return RatPoly(Rational(N + 2 - n));
    if (c == n - 1 && c >= 0) return t;
    if (c == n) return t;  // s = t slice
    if (c == n + 1) return RatPoly(Rational(n + 1));
    return {};
  };

  Mat<RatPoly> top(N + 1, N + 1), bottom(N + 1, N + 1);
  for (int r = 0; r <= N; ++r)
    for (int c = 0; c <= N; ++c) {
      top(r, c) = entry(r, c);
      bottom(r, c) = entry(r + 1, c);
    }
  return {poly_mat_determinant(top, N + 1), poly_mat_determinant(bottom, N + 1)};
}

}  // namespace

RootScanResult rescaled_root_scan(int N) {
  if (N < 0 || N > 8)
    throw std::invalid_argument("rescaled_root_scan: supported for 0 <= N <= 8 only");

  RootScanResult out;
  auto [top, bottom] = minor_pair(N);
  out.top_minor = top.primitive_integer();
  out.bottom_minor = bottom.primitive_integer();
  out.common = poly_gcd(out.top_minor, out.bottom_minor).primitive_integer();

  auto top_split = integer_roots(out.top_minor);
  out.top_roots = std::move(top_split.roots);
  out.top_remainder = std::move(top_split.remainder);
  auto bottom_split = integer_roots(out.bottom_minor);
  out.bottom_roots = std::move(bottom_split.roots);
  out.bottom_remainder = std::move(bottom_split.remainder);

  auto common_split = integer_roots(out.common);

  // Non-integer real common roots exist from N = 3 on; none of them may
  // carry a kernel. Checked numerically at 256-bit precision, where a
  // genuine kernel would sit at ~1e-70 and these sit at order one.
  if (common_split.remainder.degree() >= 1) {
    for (const auto& z : complex_roots(common_split.remainder)) {
      if (!(abs(z.imag()) < Float256("1e-60") * (1 + abs(z.real())))) continue;
      const Float256 t = z.real();
      const auto kernel =
          pivoted_kernel_solve(rescaled_matrix<Float256>(N, t, t), Float256("1e-50"));
      if (kernel.kernel_dim >= 1)
        out.extra_kernel_roots = true;
      else
        out.spurious_real_common_roots.push_back(static_cast<double>(t));
    }
  }

  // A common zero of the two minors need not be a kernel point of the full
  // rectangular system; verify each candidate exactly before accepting it.
  for (const auto& root : common_split.roots) {
    const Rational t(root.root);
    const auto kernel = pivoted_kernel_solve(rescaled_matrix<Rational>(N, t, t), Rational(0));
    const long long value = static_cast<long long>(root.root);
    if (kernel.kernel_dim >= 1) {
      std::vector<Rational> h = kernel.vector;
      if (h[0] == 0) throw std::logic_error("rescaled_root_scan: kernel with vanishing h_0");
      const Rational norm = h[0];
      for (auto& v : h) v /= norm;
      out.kernel_roots.push_back(value);
      out.kernels.push_back(std::move(h));
    } else {
      out.spurious_common_roots.push_back(value);
    }
  }

  // Descending order matches the multiplet enumeration t_k = N - 3k.
  std::vector<size_t> order(out.kernel_roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return out.kernel_roots[a] > out.kernel_roots[b]; });
  std::vector<long long> roots_sorted;
  std::vector<std::vector<Rational>> kernels_sorted;
  for (size_t i : order) {
    roots_sorted.push_back(out.kernel_roots[i]);
    kernels_sorted.push_back(std::move(out.kernels[i]));
  }
  out.kernel_roots = std::move(roots_sorted);
  out.kernels = std::move(kernels_sorted);
  std::sort(out.spurious_common_roots.begin(), out.spurious_common_roots.end());
  return out;
}

}  // namespace qes
