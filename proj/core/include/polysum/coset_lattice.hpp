#pragma once

#include <array>
#include <cstdint>

#include "polysum/polygonal.hpp"
#include "polysum/qseries.hpp"

namespace polysum {

/// A translated sublattice of Z^3: the set of v with v_i = residues[i]
/// (mod modulus). Residues are stored reduced to [0, modulus).
struct CosetZ3 {
  std::int64_t modulus;
  std::array<std::int64_t, 3> residues;

  CosetZ3(std::int64_t modulus_, std::array<std::int64_t, 3> residues_);
};

/// Coset hosting the completed-square image of p_m(x)+p_m(y)+p_m(z):
/// even m -> modulus m-2, residues ((m-4)/2, ...); odd m -> modulus 2(m-2),
/// residues (m-4, ...). The sign convention stores +(m-4)/2; counts agree
/// with the -(m-4)/2 convention by negation symmetry.
CosetZ3 coset_for(const PolygonalFamily& family);

/// Coordinatewise negation modulo the modulus.
CosetZ3 negate(const CosetZ3& coset);

/// Number of ordered (X,Y,Z) in the coset with X^2+Y^2+Z^2 = ell.
std::int64_t rep_count(const CosetZ3& coset, std::int64_t ell);

/// Theta series of the coset: coefficient at ell <= bound is
/// rep_count(coset, ell).
QSeries theta_series(const CosetZ3& coset, std::int64_t bound, int threads = 0);

/// Number of signed permutation matrices (the 48-element orthogonal group of
/// the diagonal lattice) fixing the residue triple mod modulus; proper_only
/// restricts to determinant +1.
int automorph_count(const CosetZ3& coset, bool proper_only = false);

}  // namespace polysum
