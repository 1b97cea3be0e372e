#include "polysum/rational.hpp"

#include <stdexcept>

namespace polysum {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::domain_error("rational_from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("to_int64: not an integer: " + to_string(q));
  const Integer& n = q.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("to_int64: out of range: " + to_string(q));
  return static_cast<std::int64_t>(n.get_si());
}

}  // namespace polysum
