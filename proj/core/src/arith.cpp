#include "polysum/arith.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace polysum {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n < 2) return n;
  // Newton iteration seeded above the root converges to the floor.
  auto u = static_cast<std::uint64_t>(n);
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(u) + 1) / 2);
  while (true) {
    std::uint64_t y = (x + u / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return static_cast<std::int64_t>(x);
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t r = isqrt(n);
  return r * r == n;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

int ord_p(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::domain_error("ord_p: argument is zero");
  if (p < 2) throw std::domain_error("ord_p: p must be >= 2");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t ipow_checked(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / p)
      throw std::overflow_error("ipow_checked: overflow");
    r *= p;
  }
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  for (std::int64_t p : {std::int64_t{2}, std::int64_t{3}}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    for (std::int64_t p : {d, d + 2}) {
      if (n % p == 0) {
        out.push_back(p);
        while (n % p == 0) n /= p;
      }
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::domain_error("divisors: argument must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void PrimeSieve::ensure(std::int64_t limit) {
  const std::int64_t goal = std::max<std::int64_t>(limit, 2);
  while (limit_ < goal) {
    // Grow geometrically; keep each segment within limit_^2 so every
    // composite's least prime factor is already on the list.
    std::int64_t hi = std::max({goal, limit_ * 2, std::int64_t{64}});
    if (limit_ >= 8 && hi > limit_ * limit_) hi = limit_ * limit_;

    const std::int64_t lo = limit_ + 1;
    std::vector<std::uint8_t> composite(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::int64_t p : primes_) {
      if (p * p > hi) break;
      std::int64_t start = std::max(p * p, ceil_div(lo, p) * p);
      for (std::int64_t q = start; q <= hi; q += p)
        composite[static_cast<std::size_t>(q - lo)] = 1;
    }
    // Self-sieve: needed only when the segment starts at 2 and thus contains
    // its own base primes.
    for (std::int64_t v = std::max<std::int64_t>(lo, 2); v <= hi; ++v) {
      if (composite[static_cast<std::size_t>(v - lo)]) continue;
      primes_.push_back(v);
      if (v <= hi / v) {
        for (std::int64_t q = v * v; q <= hi; q += v)
          composite[static_cast<std::size_t>(q - lo)] = 1;
      }
    }
    limit_ = hi;
  }
}

BitVec::BitVec(std::int64_t size) : size_(size) {
  if (size < 0) throw std::domain_error("BitVec: negative size");
  words_.assign(static_cast<std::size_t>((size + 63) / 64), 0);
}

void BitVec::set(std::int64_t i) {
  words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
}

bool BitVec::test(std::int64_t i) const {
  if (i < 0 || i >= size_) return false;
  return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
}

std::int64_t BitVec::count() const {
  std::int64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

void BitVec::or_with(const BitVec& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVec::or_with: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

void BitVec::or_shifted(const BitVec& src, std::int64_t shift) {
  // Sizes may differ; bits landing outside [0, size_) are dropped.
  const std::int64_t nw = static_cast<std::int64_t>(words_.size());
  const std::int64_t sw = static_cast<std::int64_t>(src.words_.size());
  if (shift >= 0) {
    const std::int64_t ws = shift >> 6;
    const int bs = static_cast<int>(shift & 63);
    for (std::int64_t j = nw - 1; j >= ws; --j) {
      std::uint64_t v = 0;
      std::int64_t s0 = j - ws;
      if (s0 < sw) v |= src.words_[static_cast<std::size_t>(s0)] << bs;
      if (bs != 0 && s0 - 1 >= 0 && s0 - 1 < sw)
        v |= src.words_[static_cast<std::size_t>(s0 - 1)] >> (64 - bs);
      words_[static_cast<std::size_t>(j)] |= v;
    }
  } else {
    const std::int64_t r = -shift;
    const std::int64_t ws = r >> 6;
    const int bs = static_cast<int>(r & 63);
    for (std::int64_t j = 0; j < nw; ++j) {
      std::uint64_t v = 0;
      std::int64_t s0 = j + ws;
      if (s0 < sw) v |= src.words_[static_cast<std::size_t>(s0)] >> bs;
      if (bs != 0 && s0 + 1 < sw)
        v |= src.words_[static_cast<std::size_t>(s0 + 1)] << (64 - bs);
      words_[static_cast<std::size_t>(j)] |= v;
    }
  }
  // Clear any bits at positions >= size_ introduced by the word-granular OR.
  if (size_ & 63) {
    words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }
}

void BitVec::or_rotated(const BitVec& src, std::int64_t shift) {
  if (src.size_ != size_) throw std::invalid_argument("BitVec::or_rotated: size mismatch");
  std::int64_t s = mod_reduce(shift, size_ == 0 ? 1 : size_);
  or_shifted(src, s);
  if (s != 0) or_shifted(src, s - size_);
}

}  // namespace polysum
