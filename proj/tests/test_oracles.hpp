#pragma once

// Brute-force oracles used only by tests. These deliberately avoid the
// library's search-bound and enumeration machinery so that agreement is
// meaningful: everything here is the most naive loop that could work.

#include <cstdint>
#include <vector>

#include "polysum/polygonal.hpp"

namespace oracle {

inline std::int64_t polygonal(std::int64_t m, std::int64_t x) {
  return ((m - 2) * x * x - (m - 4) * x) / 2;
}

/// Ordered triples (x,y,z) with p_m(x)+p_m(y)+p_m(z) = n, by scanning a
/// generous symmetric coordinate box.
inline std::int64_t representation_count(std::int64_t m, std::int64_t n) {
  std::int64_t r = 3;
  while (polygonal(m, r) <= n || polygonal(m, -r) <= n) ++r;
  std::int64_t count = 0;
  for (std::int64_t x = -r; x <= r; ++x) {
    const std::int64_t px = polygonal(m, x);
    if (px > n) continue;
    for (std::int64_t y = -r; y <= r; ++y) {
      const std::int64_t py = polygonal(m, y);
      if (px + py > n) continue;
      for (std::int64_t z = -r; z <= r; ++z) {
        if (px + py + polygonal(m, z) == n) ++count;
      }
    }
  }
  return count;
}

/// r3(n) by scanning the cube [-s, s]^3.
inline std::int64_t r3(std::int64_t n) {
  std::int64_t s = 0;
  while (s * s <= n) ++s;
  std::int64_t count = 0;
  for (std::int64_t a = -s; a <= s; ++a)
    for (std::int64_t b = -s; b <= s; ++b)
      for (std::int64_t c = -s; c <= s; ++c)
        if (a * a + b * b + c * c == n) ++count;
  return count;
}

/// Coset representation count by scanning the cube.
inline std::int64_t coset_count(std::int64_t M, std::int64_t r1, std::int64_t r2,
                                std::int64_t r3_, std::int64_t ell) {
  std::int64_t s = 0;
  while (s * s <= ell) ++s;
  auto in_class = [M](std::int64_t v, std::int64_t r) { return ((v - r) % M + M) % M == 0; };
  std::int64_t count = 0;
  for (std::int64_t a = -s; a <= s; ++a) {
    if (!in_class(a, r1)) continue;
    for (std::int64_t b = -s; b <= s; ++b) {
      if (!in_class(b, r2)) continue;
      for (std::int64_t c = -s; c <= s; ++c) {
        if (!in_class(c, r3_)) continue;
        if (a * a + b * b + c * c == ell) ++count;
      }
    }
  }
  return count;
}

/// Legendre symbol by Euler's criterion; p an odd prime.
inline int legendre(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  std::int64_t result = 1;
  std::int64_t base = a;
  std::int64_t e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace oracle
