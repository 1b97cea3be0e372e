// Acceptance suite: every criterion below is pinned to an exact value or an
// exact identity; there are no tolerances anywhere. Prints one line per
// criterion and exits nonzero if any of them fails.

#include <algorithm>
#include <cinttypes>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "polysum/arith.hpp"
#include "polysum/class_numbers.hpp"
#include "polysum/coset_lattice.hpp"
#include "polysum/local_analysis.hpp"
#include "polysum/polygonal.hpp"
#include "polysum/qseries.hpp"
#include "polysum/spinor_m14.hpp"
#include "polysum/witnesses.hpp"

using namespace polysum;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* fmt, ...) {
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: ", ok ? "PASS" : "FAIL", criterion);
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  std::fflush(stdout);
}

void criterion_1_siegel_weil() {
  const std::int64_t bound = 27648;
  SiegelWeilReport r = verify_siegel_weil(bound);
  report(1, r.ok(),
         "Siegel-Weil identities exact at every exponent <= %" PRId64
         " (plus %s, minus %s)",
         bound, r.plus_identity_holds ? "ok" : "BROKEN",
         r.minus_identity_holds ? "ok" : "BROKEN");
}

void criterion_2_automorphs() {
  GenusM14 g = GenusM14::standard();
  const int a = automorph_count(g.nu);
  const int b = automorph_count(g.five_nu);
  const int c = automorph_count(g.mu);
  const int d = automorph_count(g.five_mu);
  report(2, a == 6 && b == 6 && c == 2 && d == 2,
         "automorph weights (%d, %d, %d, %d) == (6, 6, 2, 2)", a, b, c, d);
}

void criterion_3_theorem52() {
  Theorem52Report r = theorem52_scan(1999);
  report(3, r.ok(),
         "no coset solutions at 3*ell^2 for %zu primes ell = 1 (mod 12) and %zu primes "
         "ell = 7 (mod 12) below 2000 (%zu violations)",
         r.checked_1_mod_12.size(), r.checked_7_mod_12.size(), r.violations.size());
}

void criterion_4_class_number_oracles() {
  bool ok = true;
  int checked_ell = 0;
  for (std::int64_t ell = 5; ell <= 97; ++ell) {
    if (!is_prime(ell)) continue;
    ++checked_ell;
    if (hurwitz(3 * ell * ell) != hurwitz_3ellsq(ell)) ok = false;
  }
  QSeries t = theta_cube(2000);
  int checked_n = 0;
  for (std::int64_t n = 3; n <= 2000; n += 8) {
    ++checked_n;
    if (Rational(r3_via_class_number(n)) != t.coefficient(n)) ok = false;
  }
  report(4, ok,
         "hurwitz(3 ell^2) closed form for %d primes <= 97; 24H(n) == r3(n) for %d "
         "values n = 3 (mod 8) <= 2000",
         checked_ell, checked_n);
}

void criterion_5_eisenstein() {
  const std::int64_t bound = 3 * 97 * 97;
  QSeries g = genus_theta(bound);
  bool ok = true;
  int checked = 0;
  for (std::int64_t ell = 5; ell <= 97; ++ell) {
    if (!is_prime(ell) || ell % 3 != 1) continue;
    ++checked;
    const Rational expected = make_rational(ell, 8);
    if (g.coefficient(3 * ell * ell) != expected) ok = false;
    if (hurwitz_3ellsq(ell) * 24 / 64 != expected) ok = false;
  }
  report(5, ok,
         "genus coefficient at 3 ell^2 equals ell/8 by both routes for %d primes "
         "ell = 1 (mod 3), 3 < ell <= 97",
         checked);
}

void criterion_6_local_obstructions() {
  const std::int64_t bound = 100000;
  bool ok = true;
  auto exc8 = exceptional_set(PolygonalFamily(8), bound);
  for (std::int64_t n = 4; n <= bound; n += 8) {
    if (!std::binary_search(exc8.begin(), exc8.end(), n)) ok = false;
  }
  auto exc12 = exceptional_set(PolygonalFamily(12), bound);
  for (std::int64_t n = 7; n <= bound; n += 8) {
    if (!std::binary_search(exc12.begin(), exc12.end(), n)) ok = false;
  }
  report(6, ok,
         "m=8 misses every n = 4 (mod 8) and m=12 every n = 7 (mod 8) up to %" PRId64,
         bound);
}

void criterion_7_p5_universal() {
  const std::int64_t bound = 1000000;
  auto exc = exceptional_set(PolygonalFamily(5), bound);
  report(7, exc.empty(), "P_5 represents every n <= %" PRId64 " (%zu exceptions)", bound,
         exc.size());
}

void criterion_8_m14_square_class() {
  const std::int64_t bound = 100000;
  SurveyReport s = survey(PolygonalFamily(14), bound);
  bool ok = s.largest_non_square_class.has_value();
  std::int64_t threshold = ok ? *s.largest_non_square_class : -1;
  for (const auto& rec : s.exceptions) {
    if (rec.n > threshold && !rec.square_class_3) ok = false;
  }
  report(8, ok,
         "every m=14 exception above %" PRId64 " satisfies 24n+75 = 3r^2 "
         "(%zu exceptions <= %" PRId64 ", %" PRId64 " in the square class)",
         threshold, s.exceptions.size(), bound, s.square_class_count);
}

void criterion_9_witnesses() {
  bool ok = true;
  auto expect = [&ok](std::int64_t m, std::int64_t ell, std::int64_t n) {
    auto w = find_witnesses(m, 10);
    if (w.size() != 10) ok = false;
    bool found = false;
    for (const auto& rep : w) {
      if (!rep.verified) ok = false;
      if (rep.ell == ell && rep.n == n) found = true;
      WitnessSpec spec(m);
      if (24 * spec.r * rep.n + 3 * (6 * spec.r - 1) * (6 * spec.r - 1) != 3 * rep.ell * rep.ell)
        ok = false;
      if (rep_count(coset_for(PolygonalFamily(m)), 3 * rep.ell * rep.ell) != 0) ok = false;
      if (representation_count(PolygonalFamily(m), rep.n) != 0) ok = false;
    }
    if (!found) ok = false;
  };
  expect(14, 13, 18);
  expect(26, 19, 15);
  expect(38, 37, 45);
  auto w50 = find_witnesses(50, 10);
  if (w50.size() != 10) ok = false;
  for (const auto& rep : w50) {
    if (!rep.verified) ok = false;
  }
  report(9, ok,
         "10 brute-force-verified witnesses for each m in {14, 26, 38, 50}; "
         "(14,13)->18, (26,19)->15, (38,37)->45 all present with the three checks agreeing");
}

void criterion_10_local_suite() {
  bool ok = true;
  int families = 0;
  for (std::int64_t m = 3; m <= 50; ++m) {
    if (m % 4 == 0) continue;
    ++families;
    if (!two_adic_surjective(m, 12)) ok = false;
    LocalChecker checker(m);
    for (std::int64_t n = 0; n <= 10000; ++n) {
      if (!checker.admissible(n)) ok = false;
    }
  }
  report(10, ok,
         "two-adic surjectivity at k=12 and local admissibility for n <= 10^4 across "
         "%d families m <= 50 with 4 not dividing m",
         families);
}

void criterion_11_sturm() {
  const std::int64_t index = sturm_index(576);
  const Rational count = weight32_coefficient_count(576);
  report(11, index == 221184 && count == 27648,
         "sturm index 576 -> %" PRId64 ", weight-3/2 coefficient count -> %s", index,
         to_string(count).c_str());
}

void criterion_12_sieve_probe() {
  SieveIdentityReport r = sieve_identity_probe(10000);
  // The residual itself at the two pinned exponents.
  QSeries lhs = sieve(theta_cube(10000), 24, 3);
  GenusM14 g = GenusM14::standard();
  QSeries coset_sum =
      add(add(scale(theta_series(g.five_nu, 10000), make_rational(1, 6)),
              scale(theta_series(g.five_mu, 10000), make_rational(1, 2))),
          add(scale(theta_series(g.nu, 10000), make_rational(1, 6)),
              scale(theta_series(g.mu, 10000), make_rational(1, 2))));
  QSeries residual = add(lhs, scale(coset_sum, Rational(-48)));
  bool ok = residual.coefficient(27) == 8 && residual.coefficient(75) == 0;
  if (!r.definitive()) ok = false;
  if (!r.dilate9_term_matches) ok = false;
  report(12, ok,
         "residual at 27 is 8 and at 75 is 0; dilation-by-9 form matches on all "
         "exponents <= 10^4; paper's printed term %s (first mismatch at %" PRId64 ")",
         r.printed_term_matches ? "also matches" : "does not match",
         r.printed_mismatch ? r.printed_mismatch->exponent : -1);
}

}  // namespace

int main() {
  std::printf("acceptance suite: sums of three generalized polygonal numbers\n");
  criterion_1_siegel_weil();
  criterion_2_automorphs();
  criterion_3_theorem52();
  criterion_4_class_number_oracles();
  criterion_5_eisenstein();
  criterion_6_local_obstructions();
  criterion_7_p5_universal();
  criterion_8_m14_square_class();
  criterion_9_witnesses();
  criterion_10_local_suite();
  criterion_11_sturm();
  criterion_12_sieve_probe();
  if (failures == 0) {
    std::printf("all 12 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures);
  return 1;
}
