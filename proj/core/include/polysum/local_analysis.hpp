#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

/// Residues mod `modulus` NOT attained by p_m(x)+p_m(y)+p_m(z), verified by
/// full residue enumeration over one exact period.
struct ObstructionReport {
  std::int64_t m;
  std::int64_t modulus;
  std::vector<std::int64_t> missing_residues;
};

/// Image of p_m modulo `modulus`, enumerated over the exact period (the
/// minimal L dividing 2*modulus with modulus | p_m(L) and modulus | (m-2)L).
std::vector<std::int64_t> polygonal_residues(std::int64_t m, std::int64_t modulus);

/// Image of p_m(x)+p_m(y)+p_m(z) modulo `modulus`.
std::vector<std::int64_t> sum_residues(std::int64_t m, std::int64_t modulus);

ObstructionReport obstruction_report(std::int64_t m, std::int64_t modulus);

/// The square-class obstruction of 4 | m: residue 4 mod 8 when m = 0 (mod 8),
/// residue 7 mod 8 when m = 4 (mod 8), nothing otherwise.
std::optional<int> mod8_obstruction(std::int64_t m);

/// Whether a single p_m attains every residue modulo 2^k. Requires 4 not
/// dividing m and 1 <= k <= 24.
bool two_adic_surjective(std::int64_t m, int k);

/// Congruence-level admissibility: for each prime p | 6(m-2), solvability of
/// p_m(x)+p_m(y)+p_m(z) = n modulo p^(k_p) with k_p = ord_p(8(m-2)^3) + 1, a
/// Hensel-stable precision. Construct once per m, then query many n.
class LocalChecker {
 public:
  explicit LocalChecker(std::int64_t m);

  bool admissible(std::int64_t n) const;

  struct PrimeLocal {
    std::int64_t p;
    int k;
    std::int64_t modulus;  // p^k
    bool image_full;       // single p_m already attains every residue
    BitVec triple_sums;    // populated only when !image_full
  };
  const std::vector<PrimeLocal>& locals() const { return locals_; }
  std::int64_t m() const { return m_; }

 private:
  std::int64_t m_;
  std::vector<PrimeLocal> locals_;
};

bool locally_admissible(std::int64_t m, std::int64_t n);

}  // namespace polysum
