#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polysum/coset_lattice.hpp"
#include "polysum/qseries.hpp"
#include "polysum/rational.hpp"

namespace polysum {

/// The four classes in the genus of the m=14 coset, mod 12, with their
/// automorph weights. The split into two spinor genera is {nu, mu} vs
/// {5nu, 5mu}.
struct GenusM14 {
  CosetZ3 nu;        // (5,5,5), weight 6
  CosetZ3 five_nu;   // (1,1,1), weight 6
  CosetZ3 mu;        // (5,1,1), weight 2
  CosetZ3 five_mu;   // (1,5,5), weight 2
  std::array<int, 4> weights;

  static GenusM14 standard();
};

enum class SpinorGenus { plus, minus };

/// Weighted genus average (3/4)(T_{5nu}/6 + T_{5mu}/2 + T_nu/6 + T_mu/2).
QSeries genus_theta(std::int64_t bound, int threads = 0);

/// plus: (3/2)(T_nu/6 + T_mu/2); minus: (3/2)(T_{5nu}/6 + T_{5mu}/2).
QSeries spinor_theta(SpinorGenus which, std::int64_t bound, int threads = 0);

struct CoefficientMismatch {
  std::int64_t exponent;
  Rational lhs;
  Rational rhs;
};

/// Checks spinor(plus) = genus - (1/8) theta_{1,3,12} and
/// spinor(minus) = genus + (1/8) theta_{1,3,12}, exactly, at every exponent
/// <= bound.
struct SiegelWeilReport {
  std::int64_t bound;
  bool plus_identity_holds;
  bool minus_identity_holds;
  std::optional<CoefficientMismatch> plus_mismatch;
  std::optional<CoefficientMismatch> minus_mismatch;

  bool ok() const { return plus_identity_holds && minus_identity_holds; }
};
SiegelWeilReport verify_siegel_weil(std::int64_t bound, int threads = 0);

/// [SL2(Z) : Gamma_1(N)] = N^2 prod_{p | N} (1 - 1/p^2), exact.
std::int64_t sturm_index(std::int64_t N);

/// Coefficient count forcing equality for weight 3/2: (3/24) * sturm_index.
Rational weight32_coefficient_count(std::int64_t N);

/// For every prime ell <= prime_bound with ell = 1 (mod 12): no solutions of
/// X^2+Y^2+Z^2 = 3 ell^2 in the class (5,5,5) mod 12; with ell = 7 (mod 12):
/// none in (1,1,1) mod 12.
struct Theorem52Report {
  std::int64_t prime_bound;
  std::vector<std::int64_t> checked_1_mod_12;
  std::vector<std::int64_t> checked_7_mod_12;
  struct Violation {
    std::int64_t ell;
    std::int64_t count;
  };
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};
Theorem52Report theorem52_scan(std::int64_t prime_bound);

/// Residual probe for the sieved cube identity: computes
/// R = Theta^3|S_{24,3} - 48*(T_{5nu}/6 + T_{5mu}/2 + T_nu/6 + T_mu/2) and
/// tests it against two closed forms: 8*Theta^3(3 tau)|S_{24,3} and
/// Theta^3(9 tau)|S_{24,3}. Reports which, if either, matches identically.
struct SieveIdentityReport {
  std::int64_t bound;
  bool printed_term_matches;    // 8 * dilation by 3, sieved
  bool dilate9_term_matches;    // dilation by 9, sieved
  std::optional<CoefficientMismatch> printed_mismatch;
  std::optional<CoefficientMismatch> dilate9_mismatch;

  bool definitive() const { return printed_term_matches || dilate9_term_matches; }
};
SieveIdentityReport sieve_identity_probe(std::int64_t bound);

}  // namespace polysum
