#include "polysum/spinor_m14.hpp"

#include <stdexcept>

#include "polysum/arith.hpp"

namespace polysum {

namespace {

QSeries weighted_pair(const CosetZ3& a, const CosetZ3& b, std::int64_t bound,
                      const Rational& outer, int threads) {
  // outer * (theta_a / 6 + theta_b / 2)
  QSeries ta = theta_series(a, bound, threads);
  QSeries tb = theta_series(b, bound, threads);
  QSeries sum = add(scale(ta, make_rational(1, 6)), scale(tb, make_rational(1, 2)));
  return scale(sum, outer);
}

std::optional<CoefficientMismatch> find_mismatch(const QSeries& lhs, const QSeries& rhs,
                                                 std::int64_t bound) {
  auto e = first_discrepancy(lhs, rhs, bound);
  if (!e) return std::nullopt;
  return CoefficientMismatch{*e, lhs.coefficient(*e), rhs.coefficient(*e)};
}

}  // namespace

GenusM14 GenusM14::standard() {
  return GenusM14{
      CosetZ3(12, {5, 5, 5}),
      CosetZ3(12, {1, 1, 1}),
      CosetZ3(12, {5, 1, 1}),
      CosetZ3(12, {1, 5, 5}),
      {6, 6, 2, 2},
  };
}

QSeries genus_theta(std::int64_t bound, int threads) {
  const GenusM14 g = GenusM14::standard();
  QSeries plus_part = weighted_pair(g.nu, g.mu, bound, Rational(1), threads);
  QSeries minus_part = weighted_pair(g.five_nu, g.five_mu, bound, Rational(1), threads);
  return scale(add(plus_part, minus_part), make_rational(3, 4));
}

QSeries spinor_theta(SpinorGenus which, std::int64_t bound, int threads) {
  const GenusM14 g = GenusM14::standard();
  if (which == SpinorGenus::plus)
    return weighted_pair(g.nu, g.mu, bound, make_rational(3, 2), threads);
  return weighted_pair(g.five_nu, g.five_mu, bound, make_rational(3, 2), threads);
}

SiegelWeilReport verify_siegel_weil(std::int64_t bound, int threads) {
  if (bound < 0) throw std::invalid_argument("verify_siegel_weil: negative bound");
  const GenusM14 g = GenusM14::standard();
  QSeries plus_part = weighted_pair(g.nu, g.mu, bound, Rational(1), threads);
  QSeries minus_part = weighted_pair(g.five_nu, g.five_mu, bound, Rational(1), threads);
  QSeries genus = scale(add(plus_part, minus_part), make_rational(3, 4));
  QSeries spn_plus = scale(plus_part, make_rational(3, 2));
  QSeries spn_minus = scale(minus_part, make_rational(3, 2));
  QSeries unary_eighth = scale(unary_theta(1, 3, 12, bound), make_rational(1, 8));

  QSeries rhs_plus = add(genus, scale(unary_eighth, Rational(-1)));
  QSeries rhs_minus = add(genus, unary_eighth);

  SiegelWeilReport report{bound, true, true, std::nullopt, std::nullopt};
  report.plus_mismatch = find_mismatch(spn_plus, rhs_plus, bound);
  report.minus_mismatch = find_mismatch(spn_minus, rhs_minus, bound);
  report.plus_identity_holds = !report.plus_mismatch.has_value();
  report.minus_identity_holds = !report.minus_mismatch.has_value();
  return report;
}

std::int64_t sturm_index(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("sturm_index: N must be >= 1");
  std::int64_t index = N * N;
  for (std::int64_t p : prime_factors(N)) {
    index = index / (p * p) * (p * p - 1);
  }
  return index;
}

Rational weight32_coefficient_count(std::int64_t N) {
  Rational r{Integer(sturm_index(N)), Integer(8)};
  r.canonicalize();
  return r;
}

Theorem52Report theorem52_scan(std::int64_t prime_bound) {
  if (prime_bound < 5) throw std::invalid_argument("theorem52_scan: prime_bound must be >= 5");
  Theorem52Report report{prime_bound, {}, {}, {}};
  const CosetZ3 class5(12, {5, 5, 5});
  const CosetZ3 class1(12, {1, 1, 1});
  PrimeSieve sieve;
  sieve.ensure(prime_bound);
  for (std::int64_t ell : sieve.primes()) {
    if (ell > prime_bound) break;
    const std::int64_t target = 3 * ell * ell;
    if (ell % 12 == 1) {
      report.checked_1_mod_12.push_back(ell);
      std::int64_t c = rep_count(class5, target);
      if (c != 0) report.violations.push_back({ell, c});
    } else if (ell % 12 == 7) {
      report.checked_7_mod_12.push_back(ell);
      std::int64_t c = rep_count(class1, target);
      if (c != 0) report.violations.push_back({ell, c});
    }
  }
  return report;
}

SieveIdentityReport sieve_identity_probe(std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("sieve_identity_probe: negative bound");
  const GenusM14 g = GenusM14::standard();

  QSeries lhs = sieve(theta_cube(bound), 24, 3);
  QSeries coset_sum = add(weighted_pair(g.nu, g.mu, bound, Rational(1), 0),
                          weighted_pair(g.five_nu, g.five_mu, bound, Rational(1), 0));
  QSeries residual = add(lhs, scale(coset_sum, Rational(-48)));

  // Candidate closed forms for the residual.
  QSeries printed = scale(sieve(dilate(theta_cube(ceil_div(bound, 3)), 3), 24, 3), Rational(8));
  QSeries dilate9 = sieve(dilate(theta_cube(ceil_div(bound, 9)), 9), 24, 3);

  SieveIdentityReport report{bound, false, false, std::nullopt, std::nullopt};
  report.printed_mismatch = find_mismatch(residual, printed, bound);
  report.dilate9_mismatch = find_mismatch(residual, dilate9, bound);
  report.printed_term_matches = !report.printed_mismatch.has_value();
  report.dilate9_term_matches = !report.dilate9_mismatch.has_value();
  return report;
}

}  // namespace polysum
