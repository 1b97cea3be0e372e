#include "polysum/witnesses.hpp"

#include <stdexcept>
#include <string>

#include "polysum/arith.hpp"
#include "polysum/coset_lattice.hpp"

namespace polysum {

WitnessSpec::WitnessSpec(std::int64_t m_) : m(m_) {
  if (m < 14 || mod_reduce(m, 12) != 2)
    throw std::invalid_argument("WitnessSpec: m must be = 2 (mod 12), m >= 14");
  r = (m - 2) / 12;
  target_residue = (r % 2 == 1) ? 1 : 7;
  integrality_square_residue = mod_reduce((6 * r - 1) * (6 * r - 1), 8 * r);
}

int target_residue(std::int64_t m) { return WitnessSpec(m).target_residue; }

std::optional<std::int64_t> witness_n(std::int64_t m, std::int64_t ell) {
  WitnessSpec spec(m);
  if (ell % 2 == 0) throw std::invalid_argument("witness_n: ell must be odd");
  const __int128 num =
      static_cast<__int128>(3) * ell * ell - static_cast<__int128>(3) * (6 * spec.r - 1) * (6 * spec.r - 1);
  const __int128 den = 24 * spec.r;
  if (num < 0 || num % den != 0) return std::nullopt;
  return static_cast<std::int64_t>(num / den);
}

std::vector<WitnessReport> find_witnesses(std::int64_t m, int count,
                                          std::int64_t prime_ceiling) {
  if (count < 1) throw std::invalid_argument("find_witnesses: count must be >= 1");
  WitnessSpec spec(m);
  const PolygonalFamily family(m);
  const CosetZ3 coset = coset_for(family);

  std::vector<WitnessReport> out;
  PrimeSieve sieve;
  sieve.ensure(1024);
  std::size_t cursor = 0;
  while (static_cast<int>(out.size()) < count) {
    if (cursor >= sieve.primes().size()) {
      if (sieve.limit() >= prime_ceiling)
        throw std::runtime_error(
            "find_witnesses: prime ceiling " + std::to_string(prime_ceiling) +
            " reached with " + std::to_string(out.size()) + " witnesses found");
      sieve.ensure(sieve.limit() * 2);
      continue;
    }
    const std::int64_t ell = sieve.primes()[cursor++];
    if (ell > prime_ceiling)
      throw std::runtime_error("find_witnesses: prime ceiling reached");
    if (ell % 12 != spec.target_residue) continue;
    auto n = witness_n(m, ell);
    if (!n) continue;

    // Three independent checks: the defining identity, the coset count at
    // 3 ell^2, and the direct brute-force count.
    const std::int64_t target = 3 * ell * ell;
    const bool identity_ok = (24 * spec.r * *n + 3 * (6 * spec.r - 1) * (6 * spec.r - 1) == target);
    const bool coset_ok = rep_count(coset, target) == 0;
    const bool direct_ok = representation_count(family, *n) == 0;
    if (!identity_ok || !coset_ok || !direct_ok) {
      throw std::runtime_error(
          "find_witnesses: predicted witness failed verification at ell = " +
          std::to_string(ell) + ", n = " + std::to_string(*n) +
          " (identity " + std::to_string(identity_ok) + ", coset " +
          std::to_string(coset_ok) + ", direct " + std::to_string(direct_ok) + ")");
    }
    out.push_back({m, ell, *n, true});
  }
  return out;
}

SurveyReport survey(const PolygonalFamily& family, std::int64_t bound, int threads) {
  SurveyReport report{family.m, bound, {}, std::nullopt, 0};
  for (std::int64_t n : exceptional_set(family, bound, threads)) {
    ExceptionRecord rec = classify_exception(family, n);
    if (rec.square_class_3) {
      ++report.square_class_count;
    } else {
      report.largest_non_square_class = n;
    }
    report.exceptions.push_back(rec);
  }
  return report;
}

}  // namespace polysum
