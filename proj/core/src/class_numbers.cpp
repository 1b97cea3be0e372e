#include "polysum/class_numbers.hpp"

#include <numeric>
#include <stdexcept>

#include "polysum/arith.hpp"

namespace polysum {

int kronecker(std::int64_t a, std::int64_t n) {
  if (a == 0 && n == 0) throw std::invalid_argument("kronecker: both arguments zero");
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++v;
    }
    // (a|2) = 1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8).
    const std::int64_t a8 = mod_reduce(a, 8);
    if (v % 2 == 1 && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Now n is odd and positive; apply quadratic reciprocity iteratively.
  a = mod_reduce(a, n);
  while (a != 0) {
    int v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    const std::int64_t n8 = n % 8;
    if (v % 2 == 1 && (n8 == 3 || n8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::int64_t t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? result : 0;
}

Discriminant::Discriminant(std::int64_t d) : value(d) {
  if (d >= 0 || mod_reduce(d, 4) > 1)
    throw std::invalid_argument("Discriminant: need D < 0 with D = 0,1 (mod 4)");
}

std::int64_t class_number(const Discriminant& D) {
  const std::int64_t d = -D.value;
  std::int64_t count = 0;
  const std::int64_t amax = isqrt(d / 3);
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = b * b + d;  // = b^2 - D
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;  // boundary forms once, with b >= 0
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

Rational hurwitz(std::int64_t d) {
  if (d <= 0 || (d % 4 != 0 && d % 4 != 3))
    throw std::invalid_argument("hurwitz: need d > 0 with d = 0,3 (mod 4)");
  Rational total(0);
  for (std::int64_t f = 1; f * f <= d; ++f) {
    if (d % (f * f) != 0) continue;
    const std::int64_t q = d / (f * f);
    if (q % 4 != 0 && q % 4 != 3) continue;
    const std::int64_t h = class_number(Discriminant(-q));
    std::int64_t u = 1;
    if (q == 3) u = 3;
    if (q == 4) u = 2;
    // mpq_class(num, den) does not reduce on its own.
    Rational layer{Integer(h), Integer(u)};
    layer.canonicalize();
    total += layer;
  }
  return total;
}

Rational hurwitz_3ellsq(std::int64_t ell) {
  if (ell <= 3 || !is_prime(ell))
    throw std::invalid_argument("hurwitz_3ellsq: ell must be a prime > 3");
  Rational r{Integer(ell + 1 - kronecker(-3, ell)), Integer(3)};
  r.canonicalize();
  return r;
}

std::int64_t r3_via_class_number(std::int64_t n) {
  if (n < 0 || n % 8 != 3)
    throw std::invalid_argument("r3_via_class_number: need n = 3 (mod 8)");
  Rational r = hurwitz(n) * 24;
  return to_int64(r);
}

}  // namespace polysum
