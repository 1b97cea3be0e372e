#include <doctest.h>

#include "polysum/coset_lattice.hpp"
#include "test_oracles.hpp"

using namespace polysum;

TEST_SUITE("coset_lattice") {

TEST_CASE("coset_for") {
  CosetZ3 c14 = coset_for(PolygonalFamily(14));
  CHECK(c14.modulus == 12);
  CHECK(c14.residues == std::array<std::int64_t, 3>{5, 5, 5});

  CosetZ3 c3 = coset_for(PolygonalFamily(3));
  CHECK(c3.modulus == 2);
  CHECK(c3.residues == std::array<std::int64_t, 3>{1, 1, 1});

  CosetZ3 c26 = coset_for(PolygonalFamily(26));
  CHECK(c26.modulus == 24);
  CHECK(c26.residues == std::array<std::int64_t, 3>{11, 11, 11});
}

TEST_CASE("rep_count frozen values") {
  CHECK(rep_count(CosetZ3(12, {5, 5, 5}), 75) == 1);
  CHECK(rep_count(CosetZ3(12, {5, 5, 5}), 507) == 0);
  CHECK(rep_count(CosetZ3(12, {1, 5, 5}), 75) == 2);
}

TEST_CASE("rep_count matches the cube-scan oracle") {
  // fixed small sweep plus a deterministic pseudo-random sample
  for (std::int64_t ell = 0; ell <= 60; ++ell) {
    CHECK(rep_count(CosetZ3(3, {1, 2, 0}), ell) == oracle::coset_count(3, 1, 2, 0, ell));
    CHECK(rep_count(CosetZ3(4, {1, 3, 2}), ell) == oracle::coset_count(4, 1, 3, 2, ell));
  }
  std::uint64_t state = 12345;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t M = 1 + static_cast<std::int64_t>(next() % 8);
    const std::int64_t r1 = static_cast<std::int64_t>(next() % M);
    const std::int64_t r2 = static_cast<std::int64_t>(next() % M);
    const std::int64_t r3 = static_cast<std::int64_t>(next() % M);
    const std::int64_t ell = static_cast<std::int64_t>(next() % 300);
    CHECK(rep_count(CosetZ3(M, {r1, r2, r3}), ell) == oracle::coset_count(M, r1, r2, r3, ell));
  }
}

TEST_CASE("negation symmetry") {
  std::uint64_t state = 777;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t M = 1 + static_cast<std::int64_t>(next() % 12);
    CosetZ3 c(M, {static_cast<std::int64_t>(next() % M), static_cast<std::int64_t>(next() % M),
                  static_cast<std::int64_t>(next() % M)});
    const std::int64_t ell = static_cast<std::int64_t>(next() % 400);
    CHECK(rep_count(c, ell) == rep_count(negate(c), ell));
  }
}

TEST_CASE("cosets mod M partition Z^3") {
  QSeries full = theta_cube(90);
  const std::int64_t M = 2;
  QSeries acc(90);
  for (std::int64_t a = 0; a < M; ++a)
    for (std::int64_t b = 0; b < M; ++b)
      for (std::int64_t c = 0; c < M; ++c)
        acc = add(acc, theta_series(CosetZ3(M, {a, b, c}), 90));
  CHECK(equal_up_to(acc, full, 90));
}

TEST_CASE("theta series of the trivial coset is theta cubed") {
  CHECK(equal_up_to(theta_series(CosetZ3(1, {0, 0, 0}), 50), theta_cube(50), 50));
}

TEST_CASE("theta series frozen support") {
  QSeries t = theta_series(CosetZ3(12, {5, 5, 5}), 80);
  REQUIRE(t.terms().size() == 1);
  CHECK(t.coefficient(75) == 1);

  // origin is not in a nontrivial coset
  QSeries s = theta_series(CosetZ3(12, {1, 5, 5}), 10);
  CHECK(s.coefficient(0) == 0);
}

TEST_CASE("theta series coefficients equal rep_count") {
  CosetZ3 c(12, {5, 1, 1});
  QSeries t = theta_series(c, 300);
  for (std::int64_t ell = 0; ell <= 300; ++ell) {
    CHECK(t.coefficient(ell) == Rational(rep_count(c, ell)));
  }
}

TEST_CASE("theta series does not depend on the thread count") {
  CosetZ3 c(12, {1, 5, 5});
  CHECK(equal_up_to(theta_series(c, 2000, 1), theta_series(c, 2000, 4), 2000));
}

TEST_CASE("automorph counts") {
  CHECK(automorph_count(CosetZ3(12, {5, 5, 5})) == 6);
  CHECK(automorph_count(CosetZ3(12, {5, 1, 1})) == 2);
  CHECK(automorph_count(CosetZ3(1, {0, 0, 0})) == 48);
  CHECK(automorph_count(CosetZ3(1, {0, 0, 0}), true) == 24);
  CHECK(automorph_count(CosetZ3(12, {5, 5, 5}), true) == 3);

  // the stabilizer order divides the group order
  for (std::int64_t M : {1, 2, 3, 4, 6, 12}) {
    for (std::int64_t a = 0; a < M; ++a)
      for (std::int64_t b = 0; b < M; ++b) {
        CHECK(48 % automorph_count(CosetZ3(M, {a, b, 1 % M})) == 0);
        CHECK(24 % automorph_count(CosetZ3(M, {a, b, 1 % M}), true) == 0);
      }
  }
}

}  // TEST_SUITE
