// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qes/precision.hpp"

namespace qes {

enum class MethodTag { fixed_point, newton, exact_elimination };

inline const char* to_string(MethodTag m) {
  switch (m) {
    case MethodTag::fixed_point: return "fixed-point";
    case MethodTag::newton: return "newton";
    default: return "exact-elimination";
  }
}

std::optional<MethodTag> method_from_string(const std::string& s);

/// One simultaneous spectral pair. Values are stored widened to 256-bit
/// components regardless of the precision they were computed at;
/// precision_bits records the computing tier.
struct QesSolution {
  Complex256 E{};
  Complex256 F{};
  std::vector<Complex256> omega;  // largest-magnitude entry normalized to 1
  Float256 residual_norm{};       // max row residual over the system scale
  MethodTag method = MethodTag::newton;
  int precision_bits = 64;
  int branch_k = -1;       // asymptotic branch index, -1 for scan results
  int indicial_shift = 0;  // 0 = principal branch; 2*ell+1 = second indicial branch
  int kernel_dim = 1;
  bool real_flag = false;
  bool escalated = false;  // precision was raised above the requested tier
};

/// Reality is a report, not a constraint: flagged when both imaginary parts
/// are below 1e-8 relative to the solution scale.
template <class Complex>
bool is_real_pair(const Complex& E, const Complex& F) {
  using std::abs;
  const auto scale = 1 + abs(E) + abs(F);
  return abs(E.imag()) < 1e-8 * scale && abs(F.imag()) < 1e-8 * scale;
}

struct SweepPoint {
  Float256 ell{};
  Complex256 E{};
  Complex256 F{};
  Complex256 s{};  // (F - 2 gamma ell) / (2 ell^(2/3))
  Complex256 t{};  // (E + 2 beta ell) / (2 ell^(1/3))
  Float256 residual_norm{};
  std::vector<Complex256> omega;
};

struct SweepRecord {
  int N = 0;
  int k = 0;
  int precision_bits = 64;
  std::vector<SweepPoint> points;  // ascending in ell
  std::optional<double> fitted_exponent;  // slope of log10|t - t_k| vs log10(ell)
  bool complete = true;
};

}  // namespace qes
