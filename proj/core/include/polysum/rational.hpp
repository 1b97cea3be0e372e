#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polysum {

// Exact fraction with arbitrary-precision numerator/denominator, always in
// canonical form (reduced, denominator > 0). GMP's mpq_class maintains both
// invariants through arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form; throws std::domain_error when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "5", "-3", "7/3", "-5/8"; the denominator is printed only when != 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; also accepts an explicit "/1".
Rational rational_from_string(const std::string& s);

bool is_integral(const Rational& q);

/// Exact conversion; throws std::domain_error if q is not an integer fitting
/// in 64 bits.
std::int64_t to_int64(const Rational& q);

}  // namespace polysum
