// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qes/asymptotic.hpp"
#include "qes/parameters.hpp"
#include "qes/solution.hpp"

namespace qes {

// Machine-readable records, JSON canonical (schema_version "1") with CSV as
// a flat projection. Numeric payloads are decimal strings carrying the full
// precision of the tier they were computed at, so parse(emit(x)) == x at
// the active precision, for every tier.

struct SolveParameters {
  ModelParameters model;
  InternalParameters internal;
  int N = 0;
  int precision_bits = 64;
  std::string strategy = "scan";
};

struct SolveDocument {
  SolveParameters params;
  std::vector<QesSolution> solutions;
  std::vector<std::string> warnings;
};

std::string emit_json(const SolveDocument& doc);
std::string emit_csv(const SolveDocument& doc);

/// Throws std::runtime_error with a position diagnostic on malformed input.
SolveDocument parse_solve_json(const std::string& text);

struct AsymptoticDocument {
  int N = 0;
  std::vector<AsymptoticMultiplet> multiplets;
  // Leading-order spectra, present when an evaluation point was given.
  std::optional<Rational> ell, beta, gamma;
  std::vector<std::pair<Float256, Float256>> spectra;  // (E, F) per multiplet
};

std::string emit_json(const AsymptoticDocument& doc);
std::string emit_csv(const AsymptoticDocument& doc);

struct SweepDocument {
  Rational beta, gamma;
  SweepRecord record;
};

std::string emit_json(const SweepDocument& doc);
std::string emit_csv(const SweepDocument& doc);

}  // namespace qes
