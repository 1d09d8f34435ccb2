// Generators shared by the property tests.  Seeds are fixed so failures
// reproduce.

#pragma once

#include "dihedral/torus_model.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace dihedral::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = uniform(rng, -bound, bound);
  return a;
}

/// Torsion coordinate p/q with q drawn from {1, 2, 4, 8} and p in [0, q).
inline Rational random_torsion_coordinate(Rng& rng) {
  static constexpr long dens[] = {1, 2, 4, 8};
  const long q = dens[uniform(rng, 0, 3)];
  return make_rational(uniform(rng, 0, q - 1), q);
}

inline RatVector random_torsion_vector(Rng& rng, std::size_t m) {
  RatVector v(m);
  for (auto& x : v) x = random_torsion_coordinate(rng);
  return v;
}

/// Random signed permutation of the E coordinates, E′ fixed up to sign, with
/// a random torsion translation.
inline ComplexMonomialMap random_monomial_map(Rng& rng, const TorusShape& shape) {
  ComplexMonomialMap map = ComplexMonomialMap::identity(shape);
  const std::size_t e_count = shape.complex_dim() - 1;
  std::iota(map.source.begin(), map.source.begin() + static_cast<long>(e_count), std::size_t{0});
  std::shuffle(map.source.begin(), map.source.begin() + static_cast<long>(e_count), rng);
  for (auto& sign : map.signs) sign = uniform(rng, 0, 1) ? 1 : -1;
  map.translation = TorsionPoint(random_torsion_vector(rng, shape.real_dim()));
  return map;
}

}  // namespace dihedral::testing
