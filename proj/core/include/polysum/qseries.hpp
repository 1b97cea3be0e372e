#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polysum/rational.hpp"

namespace polysum {

// Truncated q-expansion with exact rational coefficients. A series knows its
// truncation bound; exponents beyond it are an error, not a silent zero.
// Absent exponents <= bound mean coefficient zero. Instances are immutable
// after construction, so they are safe to share across threads.
class QSeries {
 public:
  explicit QSeries(std::int64_t bound);
  QSeries(std::int64_t bound, std::map<std::int64_t, Rational> terms);

  /// counts[e] becomes the coefficient at exponent e; zeros are dropped.
  static QSeries from_counts(std::int64_t bound, const std::vector<std::int64_t>& counts);

  std::int64_t bound() const { return bound_; }

  /// Coefficient at exponent e; throws std::out_of_range for e < 0 or
  /// e > bound().
  Rational coefficient(std::int64_t e) const;

  /// Sparse view: nonzero terms in ascending exponent order.
  const std::map<std::int64_t, Rational>& terms() const { return terms_; }

 private:
  std::int64_t bound_;
  std::map<std::int64_t, Rational> terms_;
};

/// Theta^3: coefficient at n is r3(n), the number of ordered (a,b,c) in Z^3
/// with a^2+b^2+c^2 = n.
QSeries theta_cube(std::int64_t bound);

/// Unary theta: sum of r*q^(t r^2) over integers r = h (mod N/t). Requires
/// t squarefree, t | N, 0 <= h < N/t.
QSeries unary_theta(std::int64_t h, std::int64_t t, std::int64_t N, std::int64_t bound);

/// Keep coefficients at exponents = c (mod N), zero the rest; bound unchanged.
QSeries sieve(const QSeries& f, std::int64_t N, std::int64_t c);

/// Coefficient at k*n equals f's coefficient at n; new bound = k*old bound.
QSeries dilate(const QSeries& f, std::int64_t k);

/// Coefficientwise sum; bound is the minimum of the operands' bounds.
QSeries add(const QSeries& f, const QSeries& g);

QSeries scale(const QSeries& f, const Rational& c);

/// Exact comparison on every exponent <= bound; requires bound to be at most
/// both operands' bounds.
bool equal_up_to(const QSeries& f, const QSeries& g, std::int64_t bound);

/// Smallest exponent <= bound where f and g differ, if any.
std::optional<std::int64_t> first_discrepancy(const QSeries& f, const QSeries& g,
                                              std::int64_t bound);

}  // namespace polysum
