#pragma once

#include <cstdint>
#include <vector>

// Exact integer helpers shared across the library. Everything here is pure
// integer arithmetic; no floating point is used anywhere, so results are
// reproducible bit for bit.

namespace polysum {

/// Floor of the square root, exact for all n >= 0.
std::int64_t isqrt(std::int64_t n);

bool is_square(std::int64_t n);

/// Floor division with b > 0 (rounds toward negative infinity).
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Ceiling division with b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// a mod b reduced to [0, b), b > 0.
std::int64_t mod_reduce(std::int64_t a, std::int64_t b);

/// Largest e with p^e | n (n != 0, p >= 2).
int ord_p(std::int64_t n, std::int64_t p);

/// p^e with overflow check.
std::int64_t ipow_checked(std::int64_t p, int e);

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// Distinct prime factors in ascending order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Sorted divisors of n > 0.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Incrementally extended prime sieve. ensure() grows the sieved range by
/// segments, reusing previously found primes; the prime list is stable
/// (earlier entries never change).
class PrimeSieve {
 public:
  void ensure(std::int64_t limit);
  const std::vector<std::int64_t>& primes() const { return primes_; }
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t limit_ = 1;
  std::vector<std::int64_t> primes_;
};

/// Fixed-size bit vector with shifted-OR, the workhorse of the sumset
/// enumeration kernels.
class BitVec {
 public:
  explicit BitVec(std::int64_t size);

  std::int64_t size() const { return size_; }
  void set(std::int64_t i);
  bool test(std::int64_t i) const;
  std::int64_t count() const;
  bool all() const { return count() == size_; }

  /// this |= (src << shift); shift may be negative (right shift). Bits
  /// shifted past either end are dropped.
  void or_shifted(const BitVec& src, std::int64_t shift);

  /// this |= rotate(src, shift) on Z/size; src.size() must equal size().
  void or_rotated(const BitVec& src, std::int64_t shift);

  void or_with(const BitVec& other);

 private:
  std::int64_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace polysum
