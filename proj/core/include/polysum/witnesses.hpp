#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polysum/polygonal.hpp"

namespace polysum {

/// Parameters of the witness family for m = 2 (mod 12): m = 12r + 2, target
/// prime class ell = 1 (mod 12) for odd r, ell = 7 (mod 12) for even r.
/// integrality_square_residue records the congruence that actually
/// characterizes integrality of the witness: n is integral for odd ell iff
/// ell^2 = (6r-1)^2 (mod 8r).
struct WitnessSpec {
  std::int64_t m;
  std::int64_t r;
  int target_residue;
  std::int64_t integrality_square_residue;  // (6r-1)^2 mod 8r

  explicit WitnessSpec(std::int64_t m_);
};

/// A verified unrepresented integer n with its certifying prime ell:
/// 24 r n + 3(6r-1)^2 = 3 ell^2 and representation_count(m, n) = 0.
struct WitnessReport {
  std::int64_t m;
  std::int64_t ell;
  std::int64_t n;
  bool verified;
};

int target_residue(std::int64_t m);

/// n = (3 ell^2 - 3(6r-1)^2) / (24 r) when that value is a nonnegative
/// integer; nullopt otherwise. Integrality is tested directly.
std::optional<std::int64_t> witness_n(std::int64_t m, std::int64_t ell);

/// First `count` primes ell in the target class whose witness n exists and
/// verifies unrepresented by brute force (and whose coset count at 3 ell^2
/// vanishes). Throws std::runtime_error if a predicted witness fails
/// verification or the search passes prime_ceiling.
std::vector<WitnessReport> find_witnesses(std::int64_t m, int count,
                                          std::int64_t prime_ceiling = 1000000);

/// Exceptional-set survey: S_m up to `bound`, each entry classified, the
/// largest exception outside the square class 3Z^2, and the square-class
/// tally.
struct SurveyReport {
  std::int64_t m;
  std::int64_t bound;
  std::vector<ExceptionRecord> exceptions;
  std::optional<std::int64_t> largest_non_square_class;
  std::int64_t square_class_count;
};
SurveyReport survey(const PolygonalFamily& family, std::int64_t bound, int threads = 0);

}  // namespace polysum
