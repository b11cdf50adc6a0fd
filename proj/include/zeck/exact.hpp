#pragma once

// Exact integer and rational arithmetic used for every count and probability.
// Both types are GMP-backed; ExactRatio is kept canonical (lowest terms,
// positive denominator) by every operation that produces one here.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zeck {

using ExactInt = mpz_class;
using ExactRatio = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument if den == 0.
ExactRatio make_ratio(const ExactInt& num, const ExactInt& den);

/// Parses "num/den" or a plain integer. Throws std::invalid_argument.
ExactRatio parse_ratio(const std::string& text);

/// "num/den"; integers are printed as "num/1" so every cell has one shape.
std::string to_string(const ExactRatio& q);
std::string to_string(const ExactInt& z);

/// Round-to-nearest conversion to double (0 on underflow, inf on overflow).
double to_double(const ExactRatio& q);
double to_double(const ExactInt& z);

/// log2 of a positive integer, accurate to double precision for any size.
double log2_of(const ExactInt& z);

/// Natural log of a positive rational, accurate for magnitudes beyond double range.
double log_of(const ExactRatio& q);

ExactInt pow_int(const ExactInt& base, unsigned long exponent);
ExactRatio pow_ratio(const ExactRatio& base, unsigned long exponent);

}  // namespace zeck
