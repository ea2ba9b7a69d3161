// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qes/precision.hpp"
#include "qes/ratpoly.hpp"

namespace qes {

/// All complex roots of a polynomial with 256-bit complex coefficients
/// (ascending order), by Durand-Kerner iteration. Tiny leading coefficients
/// are trimmed relative to the largest coefficient.
std::vector<Complex256> complex_roots(std::vector<Complex256> coeffs);

/// All distinct complex roots of an exact rational polynomial: square-free
/// reduction in exact arithmetic, then Durand-Kerner plus Newton polishing
/// against the exact coefficients.
std::vector<Complex256> complex_roots(const RatPoly& p);

}  // namespace qes
