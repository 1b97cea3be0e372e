#pragma once

#include <cstdint>

#include "polysum/rational.hpp"

namespace polysum {

/// Kronecker-Jacobi-Legendre symbol (a|n), fully extended to all integers
/// (not both zero).
int kronecker(std::int64_t a, std::int64_t n);

/// Discriminant of an imaginary quadratic order: D < 0, D = 0 or 1 (mod 4).
struct Discriminant {
  std::int64_t value;
  explicit Discriminant(std::int64_t d);
};

/// h(D): number of reduced primitive binary quadratic forms (a,b,c) with
/// b^2 - 4ac = D, |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a,b,c)=1.
/// Exhaustive enumeration; this is the library's independent oracle for
/// class numbers.
std::int64_t class_number(const Discriminant& D);

/// Hurwitz class number H(d) for d > 0, d = 0 or 3 (mod 4): the sum of
/// h(-d/f^2)/u(-d/f^2) over f with f^2 | d and -d/f^2 a discriminant, where
/// u(-3) = 3, u(-4) = 2, u = 1 otherwise.
Rational hurwitz(std::int64_t d);

/// Closed form (1/3)(ell + 1 - (-3|ell)) for H(3 ell^2), ell prime > 3.
Rational hurwitz_3ellsq(std::int64_t ell);

/// r3(n) = 24 H(n) for n = 3 (mod 8).
std::int64_t r3_via_class_number(std::int64_t n);

}  // namespace polysum
