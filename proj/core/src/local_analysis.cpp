#include "polysum/local_analysis.hpp"

#include <stdexcept>

namespace polysum {

namespace {

/// p_m(x) mod q, overflow-safe for q up to 2^25.
std::int64_t polygonal_mod(std::int64_t m, std::int64_t x, std::int64_t q) {
  const std::int64_t two_q = 2 * q;
  const std::int64_t xr = mod_reduce(x, two_q);
  const std::int64_t a = mod_reduce(m - 2, two_q);
  const std::int64_t b = mod_reduce(m - 4, two_q);
  // ((m-2)x^2 - (m-4)x) mod 2q is even, so halving afterwards is exact.
  const std::int64_t x2 = mod_reduce(xr * xr, two_q);
  const std::int64_t t = mod_reduce(a * x2 - b * xr, two_q);
  return (t / 2) % q;
}

/// Exact period of p_m mod q: minimal L | 2q with q | p_m(L) and q | (m-2)L.
std::int64_t exact_period(std::int64_t m, std::int64_t q) {
  for (std::int64_t L : divisors(2 * q)) {
    if (mod_reduce(mod_reduce(m - 2, q) * mod_reduce(L, q), q) != 0) continue;
    if (polygonal_mod(m, L, q) != 0) continue;
    return L;
  }
  return 2 * q;  // unreachable: L = 2q always qualifies
}

BitVec residue_bitmap(std::int64_t m, std::int64_t q) {
  BitVec image(q);
  const std::int64_t period = exact_period(m, q);
  for (std::int64_t x = 0; x < period; ++x) image.set(polygonal_mod(m, x, q));
  return image;
}

}  // namespace

std::vector<std::int64_t> polygonal_residues(std::int64_t m, std::int64_t modulus) {
  if (m < 3) throw std::invalid_argument("polygonal_residues: m must be >= 3");
  if (modulus < 1) throw std::invalid_argument("polygonal_residues: modulus must be >= 1");
  BitVec image = residue_bitmap(m, modulus);
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < modulus; ++r) {
    if (image.test(r)) out.push_back(r);
  }
  return out;
}

std::vector<std::int64_t> sum_residues(std::int64_t m, std::int64_t modulus) {
  if (m < 3) throw std::invalid_argument("sum_residues: m must be >= 3");
  if (modulus < 1) throw std::invalid_argument("sum_residues: modulus must be >= 1");
  BitVec one = residue_bitmap(m, modulus);
  BitVec two(modulus);
  BitVec three(modulus);
  for (std::int64_t r = 0; r < modulus; ++r) {
    if (one.test(r)) two.or_rotated(one, r);
  }
  for (std::int64_t r = 0; r < modulus; ++r) {
    if (one.test(r)) three.or_rotated(two, r);
  }
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < modulus; ++r) {
    if (three.test(r)) out.push_back(r);
  }
  return out;
}

ObstructionReport obstruction_report(std::int64_t m, std::int64_t modulus) {
  auto attained = sum_residues(m, modulus);
  ObstructionReport report{m, modulus, {}};
  std::size_t i = 0;
  for (std::int64_t r = 0; r < modulus; ++r) {
    if (i < attained.size() && attained[i] == r) {
      ++i;
    } else {
      report.missing_residues.push_back(r);
    }
  }
  return report;
}

std::optional<int> mod8_obstruction(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("mod8_obstruction: m must be >= 3");
  if (m % 8 == 0) return 4;
  if (m % 8 == 4) return 7;
  return std::nullopt;
}

bool two_adic_surjective(std::int64_t m, int k) {
  if (m < 3 || m % 4 == 0)
    throw std::invalid_argument("two_adic_surjective: need m >= 3 with 4 not dividing m");
  if (k < 1 || k > 24) throw std::invalid_argument("two_adic_surjective: need 1 <= k <= 24");
  const std::int64_t q = std::int64_t{1} << k;
  return residue_bitmap(m, q).all();
}

LocalChecker::LocalChecker(std::int64_t m) : m_(m) {
  if (m < 3) throw std::invalid_argument("LocalChecker: m must be >= 3");
  const std::int64_t m2 = m - 2;
  std::vector<std::int64_t> ps = prime_factors(6 * m2);
  for (std::int64_t p : ps) {
    const int k = ord_p(8, p) + 3 * ord_p(m2, p) + 1;
    const std::int64_t q = ipow_checked(p, k);
    BitVec image = residue_bitmap(m, q);
    if (image.all()) {
      locals_.push_back({p, k, q, true, BitVec(0)});
      continue;
    }
    BitVec two(q);
    BitVec three(q);
    for (std::int64_t r = 0; r < q; ++r) {
      if (image.test(r)) two.or_rotated(image, r);
    }
    for (std::int64_t r = 0; r < q; ++r) {
      if (image.test(r)) three.or_rotated(two, r);
    }
    locals_.push_back({p, k, q, false, std::move(three)});
  }
}

bool LocalChecker::admissible(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("LocalChecker::admissible: n must be >= 0");
  for (const auto& loc : locals_) {
    if (loc.image_full) continue;
    if (!loc.triple_sums.test(mod_reduce(n, loc.modulus))) return false;
  }
  return true;
}

bool locally_admissible(std::int64_t m, std::int64_t n) {
  return LocalChecker(m).admissible(n);
}

}  // namespace polysum
