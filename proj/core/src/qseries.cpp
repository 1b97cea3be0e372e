#include "polysum/qseries.hpp"

#include <limits>
#include <stdexcept>

#include "polysum/arith.hpp"

namespace polysum {

QSeries::QSeries(std::int64_t bound) : bound_(bound) {
  if (bound < 0) throw std::invalid_argument("QSeries: negative bound");
}

QSeries::QSeries(std::int64_t bound, std::map<std::int64_t, Rational> terms)
    : bound_(bound), terms_(std::move(terms)) {
  if (bound < 0) throw std::invalid_argument("QSeries: negative bound");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0 || it->first > bound_)
      throw std::out_of_range("QSeries: exponent outside [0, bound]");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

QSeries QSeries::from_counts(std::int64_t bound, const std::vector<std::int64_t>& counts) {
  if (static_cast<std::int64_t>(counts.size()) > bound + 1)
    throw std::out_of_range("QSeries::from_counts: more counts than bound allows");
  std::map<std::int64_t, Rational> terms;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] != 0) terms.emplace(static_cast<std::int64_t>(e), Rational(counts[e]));
  }
  return QSeries(bound, std::move(terms));
}

Rational QSeries::coefficient(std::int64_t e) const {
  if (e < 0 || e > bound_)
    throw std::out_of_range("QSeries::coefficient: exponent outside [0, bound]");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

QSeries theta_cube(std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("theta_cube: negative bound");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(bound) + 1, 0);
  const std::int64_t amax = isqrt(bound);
  for (std::int64_t a = -amax; a <= amax; ++a) {
    const std::int64_t ra = bound - a * a;
    const std::int64_t bmax = isqrt(ra);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      const std::int64_t rb = ra - b * b;
      const std::int64_t cmax = isqrt(rb);
      const std::int64_t base = a * a + b * b;
      for (std::int64_t c = -cmax; c <= cmax; ++c) {
        ++counts[static_cast<std::size_t>(base + c * c)];
      }
    }
  }
  return QSeries::from_counts(bound, counts);
}

QSeries unary_theta(std::int64_t h, std::int64_t t, std::int64_t N, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("unary_theta: negative bound");
  if (t < 1 || N < 1 || N % t != 0)
    throw std::invalid_argument("unary_theta: t must be a positive divisor of N");
  for (std::int64_t p : prime_factors(t)) {
    if ((t / p) % p == 0) throw std::invalid_argument("unary_theta: t must be squarefree");
  }
  const std::int64_t step = N / t;
  if (h < 0 || h >= step)
    throw std::invalid_argument("unary_theta: h must satisfy 0 <= h < N/t");

  std::map<std::int64_t, Rational> terms;
  const std::int64_t rmax = isqrt(bound / t);
  // All r = h (mod step) with t r^2 <= bound, negatives included.
  std::int64_t r0 = -rmax + mod_reduce(h + rmax, step);
  for (std::int64_t r = r0; r <= rmax; r += step) {
    if (t * r * r > bound) continue;
    auto [it, inserted] = terms.emplace(t * r * r, Rational(r));
    if (!inserted) it->second += r;
  }
  return QSeries(bound, std::move(terms));
}

QSeries sieve(const QSeries& f, std::int64_t N, std::int64_t c) {
  if (N < 1 || c < 0 || c >= N)
    throw std::invalid_argument("sieve: need N >= 1 and 0 <= c < N");
  std::map<std::int64_t, Rational> terms;
  for (const auto& [e, v] : f.terms()) {
    if (mod_reduce(e, N) == c) terms.emplace(e, v);
  }
  return QSeries(f.bound(), std::move(terms));
}

QSeries dilate(const QSeries& f, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
  if (f.bound() > std::numeric_limits<std::int64_t>::max() / k)
    throw std::overflow_error("dilate: bound overflow");
  std::map<std::int64_t, Rational> terms;
  for (const auto& [e, v] : f.terms()) terms.emplace(e * k, v);
  return QSeries(f.bound() * k, std::move(terms));
}

QSeries add(const QSeries& f, const QSeries& g) {
  const std::int64_t bound = std::min(f.bound(), g.bound());
  std::map<std::int64_t, Rational> terms;
  for (const auto& [e, v] : f.terms()) {
    if (e <= bound) terms.emplace(e, v);
  }
  for (const auto& [e, v] : g.terms()) {
    if (e > bound) continue;
    auto [it, inserted] = terms.emplace(e, v);
    if (!inserted) it->second += v;
  }
  return QSeries(bound, std::move(terms));
}

QSeries scale(const QSeries& f, const Rational& c) {
  std::map<std::int64_t, Rational> terms;
  if (c != 0) {
    for (const auto& [e, v] : f.terms()) terms.emplace(e, v * c);
  }
  return QSeries(f.bound(), std::move(terms));
}

std::optional<std::int64_t> first_discrepancy(const QSeries& f, const QSeries& g,
                                              std::int64_t bound) {
  if (bound > f.bound() || bound > g.bound())
    throw std::invalid_argument("first_discrepancy: bound exceeds an operand's bound");
  auto fi = f.terms().begin();
  auto gi = g.terms().begin();
  const auto fe = f.terms().end();
  const auto ge = g.terms().end();
  while (fi != fe || gi != ge) {
    std::int64_t ef = (fi != fe) ? fi->first : bound + 1;
    std::int64_t eg = (gi != ge) ? gi->first : bound + 1;
    std::int64_t e = std::min(ef, eg);
    if (e > bound) break;
    if (ef < eg) {
      return e;  // g has zero here
    } else if (eg < ef) {
      return e;
    } else {
      if (fi->second != gi->second) return e;
      ++fi;
      ++gi;
    }
  }
  return std::nullopt;
}

bool equal_up_to(const QSeries& f, const QSeries& g, std::int64_t bound) {
  return !first_discrepancy(f, g, bound).has_value();
}

}  // namespace polysum
