#pragma once

#include <string>
#include <string_view>

#include "rdegree/types.hpp"

namespace rdegree {

// Exact decimal rendering, never scientific notation.
std::string format_integer(const BigInt& value);

// "p/q" in lowest terms, or a plain integer when q == 1.
std::string format_rational(const Rational& value);

// Nine significant digits ("%.9g").
std::string format_real(double value);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

}  // namespace rdegree
