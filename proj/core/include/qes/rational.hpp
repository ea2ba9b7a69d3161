// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3/4", "-2", "0.25", "1e2", "2.5e-3" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Exact rational square root, if one exists.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Canonical text form: integer as "n", otherwise "num/den".
std::string to_string(const Rational& value);

}  // namespace qes
