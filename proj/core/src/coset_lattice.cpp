#include "polysum/coset_lattice.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

namespace {

/// Smallest member of the residue class >= lo.
std::int64_t first_in_class(std::int64_t lo, std::int64_t residue, std::int64_t modulus) {
  return lo + mod_reduce(residue - lo, modulus);
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

CosetZ3::CosetZ3(std::int64_t modulus_, std::array<std::int64_t, 3> residues_)
    : modulus(modulus_), residues(residues_) {
  if (modulus < 1) throw std::invalid_argument("CosetZ3: modulus must be >= 1");
  for (auto& r : residues) r = mod_reduce(r, modulus);
}

CosetZ3 coset_for(const PolygonalFamily& family) {
  const std::int64_t m = family.m;
  if (m % 2 == 0) {
    const std::int64_t M = m - 2;
    const std::int64_t rho = (m - 4) / 2;
    return CosetZ3(M, {rho, rho, rho});
  }
  const std::int64_t M = 2 * (m - 2);
  const std::int64_t rho = m - 4;
  return CosetZ3(M, {rho, rho, rho});
}

CosetZ3 negate(const CosetZ3& coset) {
  return CosetZ3(coset.modulus, {-coset.residues[0], -coset.residues[1], -coset.residues[2]});
}

std::int64_t rep_count(const CosetZ3& coset, std::int64_t ell) {
  if (ell < 0) throw std::invalid_argument("rep_count: ell must be >= 0");
  const std::int64_t M = coset.modulus;
  const std::int64_t s = isqrt(ell);
  std::int64_t count = 0;
  for (std::int64_t x = first_in_class(-s, coset.residues[0], M); x <= s; x += M) {
    const std::int64_t rx = ell - x * x;
    const std::int64_t sy = isqrt(rx);
    for (std::int64_t y = first_in_class(-sy, coset.residues[1], M); y <= sy; y += M) {
      const std::int64_t rz = rx - y * y;
      const std::int64_t z = isqrt(rz);
      if (z * z != rz) continue;
      if (mod_reduce(z, M) == coset.residues[2]) ++count;
      if (z != 0 && mod_reduce(-z, M) == coset.residues[2]) ++count;
    }
  }
  return count;
}

QSeries theta_series(const CosetZ3& coset, std::int64_t bound, int threads) {
  if (bound < 0) throw std::invalid_argument("theta_series: bound must be >= 0");
  const std::int64_t M = coset.modulus;
  const std::int64_t s = isqrt(bound);

  std::vector<std::int64_t> xs;
  for (std::int64_t x = first_in_class(-s, coset.residues[0], M); x <= s; x += M)
    xs.push_back(x);

  const int nt = resolve_threads(threads);
  std::vector<std::vector<std::int64_t>> partial(
      static_cast<std::size_t>(nt),
      std::vector<std::int64_t>(static_cast<std::size_t>(bound) + 1, 0));

  auto work = [&](int t) {
    auto& counts = partial[static_cast<std::size_t>(t)];
    for (std::size_t i = static_cast<std::size_t>(t); i < xs.size();
         i += static_cast<std::size_t>(nt)) {
      const std::int64_t x = xs[i];
      const std::int64_t rx = bound - x * x;
      const std::int64_t sy = isqrt(rx);
      for (std::int64_t y = first_in_class(-sy, coset.residues[1], M); y <= sy; y += M) {
        const std::int64_t rz = rx - y * y;
        const std::int64_t sz = isqrt(rz);
        const std::int64_t base = x * x + y * y;
        for (std::int64_t z = first_in_class(-sz, coset.residues[2], M); z <= sz; z += M) {
          ++counts[static_cast<std::size_t>(base + z * z)];
        }
      }
    }
  };

  std::vector<std::thread> workers;
  for (int t = 0; t < nt; ++t) workers.emplace_back(work, t);
  for (auto& w : workers) w.join();

  auto& counts = partial[0];
  for (int t = 1; t < nt; ++t) {
    for (std::size_t e = 0; e < counts.size(); ++e)
      counts[e] += partial[static_cast<std::size_t>(t)][e];
  }
  return QSeries::from_counts(bound, counts);
}

int automorph_count(const CosetZ3& coset, bool proper_only) {
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static constexpr int kPermSign[6] = {1, -1, -1, 1, 1, -1};
  const std::int64_t M = coset.modulus;
  int count = 0;
  for (int pi = 0; pi < 6; ++pi) {
    for (int signs = 0; signs < 8; ++signs) {
      int det = kPermSign[pi];
      bool fixes = true;
      for (int i = 0; i < 3; ++i) {
        const int eps = (signs >> i) & 1 ? -1 : 1;
        if (eps < 0) det = -det;
        const std::int64_t image = mod_reduce(eps * coset.residues[kPerms[pi][i]], M);
        if (image != coset.residues[i]) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      if (proper_only && det != 1) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace polysum
