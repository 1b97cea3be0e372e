#include "polysum/polygonal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "polysum/arith.hpp"

namespace polysum {

namespace {

std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(what);
  return static_cast<std::int64_t>(v);
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

PolygonalFamily::PolygonalFamily(std::int64_t m_) : m(m_) {
  if (m < 3) throw std::invalid_argument("PolygonalFamily: m must be >= 3");
}

std::int64_t polygonal_number(const PolygonalFamily& family, std::int64_t x) {
  const __int128 m2 = family.m - 2;
  const __int128 m4 = family.m - 4;
  const __int128 xx = x;
  return checked_narrow((m2 * xx * xx - m4 * xx) / 2, "polygonal_number: overflow");
}

std::int64_t ell_of(const PolygonalFamily& family, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("ell_of: n must be >= 0");
  const __int128 m2 = family.m - 2;
  const __int128 m4 = family.m - 4;
  if (family.even_order()) {
    const __int128 half = m4 / 2;
    return checked_narrow(2 * m2 * n + 3 * half * half, "ell_of: overflow");
  }
  return checked_narrow(8 * m2 * n + 3 * m4 * m4, "ell_of: overflow");
}

CoordinateRange coordinate_range(const PolygonalFamily& family, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("coordinate_range: n must be >= 0");
  const std::int64_t m2 = family.m - 2;
  const std::int64_t m4 = family.m - 4;
  // p_m(x) <= n  <=>  (m-2)x^2 - (m-4)x - 2n <= 0; the edges come from the
  // quadratic formula with an integer square root, then are nudged exactly.
  const std::int64_t disc =
      checked_narrow(static_cast<__int128>(m4) * m4 + static_cast<__int128>(8) * m2 * n,
                     "coordinate_range: overflow");
  const std::int64_t s = isqrt(disc);
  std::int64_t hi = floor_div(m4 + s, 2 * m2);
  std::int64_t lo = ceil_div(m4 - s, 2 * m2);
  while (polygonal_number(family, hi + 1) <= n) ++hi;
  while (polygonal_number(family, hi) > n) --hi;
  while (polygonal_number(family, lo - 1) <= n) --lo;
  while (polygonal_number(family, lo) > n) ++lo;
  return {lo, hi};
}

std::vector<std::int64_t> polygonal_values_up_to(const PolygonalFamily& family,
                                                 std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("polygonal_values_up_to: bound must be >= 0");
  const auto [lo, hi] = coordinate_range(family, bound);
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t x = lo; x <= hi; ++x) {
    std::int64_t v = polygonal_number(family, x);
    if (v <= bound) vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::int64_t representation_count(const PolygonalFamily& family, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("representation_count: n must be >= 0");
  const auto [lo, hi] = coordinate_range(family, n);

  // Value -> number of x producing it (p_4(x) = x^2 has two preimages).
  std::unordered_map<std::int64_t, std::int64_t> mult;
  std::vector<std::int64_t> vals;
  for (std::int64_t x = lo; x <= hi; ++x) {
    std::int64_t v = polygonal_number(family, x);
    if (v > n) continue;
    if (++mult[v] == 1) vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end());

  std::int64_t count = 0;
  for (std::int64_t a : vals) {
    const std::int64_t ma = mult[a];
    for (std::int64_t b : vals) {
      if (a + b > n) break;
      auto it = mult.find(n - a - b);
      if (it != mult.end()) count += ma * mult[b] * it->second;
    }
  }
  return count;
}

std::vector<std::int64_t> exceptional_set(const PolygonalFamily& family,
                                          std::int64_t bound, int threads) {
  if (bound < 0) throw std::invalid_argument("exceptional_set: bound must be >= 0");
  const auto vals = polygonal_values_up_to(family, bound);
  const int nt = resolve_threads(threads);

  BitVec single(bound + 1);
  for (std::int64_t v : vals) single.set(v);

  // Sums of k+1 values from sums of k values by shifted OR; each worker
  // accumulates into its own bitmap and the merge is a commutative OR, so
  // the result is independent of the thread count.
  auto sum_stage = [&](const BitVec& src) {
    std::vector<BitVec> parts;
    parts.reserve(static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) parts.emplace_back(bound + 1);
    std::vector<std::thread> workers;
    for (int t = 0; t < nt; ++t) {
      workers.emplace_back([&, t]() {
        for (std::size_t i = static_cast<std::size_t>(t); i < vals.size();
             i += static_cast<std::size_t>(nt)) {
          parts[static_cast<std::size_t>(t)].or_shifted(src, vals[i]);
        }
      });
    }
    for (auto& w : workers) w.join();
    BitVec merged(bound + 1);
    for (const auto& p : parts) merged.or_with(p);
    return merged;
  };

  BitVec two = sum_stage(single);
  BitVec three = sum_stage(two);

  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (!three.test(n)) out.push_back(n);
  }
  return out;
}

ExceptionRecord classify_exception(const PolygonalFamily& family, std::int64_t n) {
  if (representation_count(family, n) != 0)
    throw std::invalid_argument("classify_exception: n is represented");
  const std::int64_t ell = ell_of(family, n);
  const bool square_class = (ell % 3 == 0) && is_square(ell / 3);
  return {n, ell, square_class};
}

}  // namespace polysum
