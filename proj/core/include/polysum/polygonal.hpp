#pragma once

#include <cstdint>
#include <vector>

namespace polysum {

/// An m-gonal family, m >= 3. p_m(x) = ((m-2)x^2 - (m-4)x)/2 over all
/// integer x, negatives included.
struct PolygonalFamily {
  std::int64_t m;

  explicit PolygonalFamily(std::int64_t m_);

  std::int64_t order_minus_2() const { return m - 2; }
  bool even_order() const { return m % 2 == 0; }
};

/// Exceptional value together with its shifted-lattice target ell_n and its
/// square-class membership (ell_n = 3 r^2).
struct ExceptionRecord {
  std::int64_t n;
  std::int64_t ell;
  bool square_class_3;
};

std::int64_t polygonal_number(const PolygonalFamily& family, std::int64_t x);

/// The completed-square target: 2(m-2)n + 3((m-4)/2)^2 for even m,
/// 8(m-2)n + 3(m-4)^2 for odd m.
std::int64_t ell_of(const PolygonalFamily& family, std::int64_t n);

/// Number of ordered (x,y,z) in Z^3 with p_m(x)+p_m(y)+p_m(z) = n.
std::int64_t representation_count(const PolygonalFamily& family, std::int64_t n);

/// All n in [0, bound] with representation_count zero, ascending.
/// threads = 0 picks the hardware concurrency; the result does not depend
/// on the thread count.
std::vector<std::int64_t> exceptional_set(const PolygonalFamily& family,
                                          std::int64_t bound, int threads = 0);

/// Classifies an unrepresented n; throws std::invalid_argument if n is in
/// fact represented.
ExceptionRecord classify_exception(const PolygonalFamily& family, std::int64_t n);

/// The exact x-interval [lo, hi] on which p_m(x) <= n, computed with integer
/// square roots.
struct CoordinateRange {
  std::int64_t lo;
  std::int64_t hi;
};
CoordinateRange coordinate_range(const PolygonalFamily& family, std::int64_t n);

/// All values p_m(x) <= bound, sorted ascending, duplicates removed.
std::vector<std::int64_t> polygonal_values_up_to(const PolygonalFamily& family,
                                                 std::int64_t bound);

}  // namespace polysum
