// Grid oracles for fixed points.  Deliberately independent of the Hermite
// form and nullspace machinery: lattice membership is tested against an
// explicit list of coset representatives of L/Z^m, and every equation is
// checked in machine integers.

#include "dihedral/action_analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

namespace dihedral {

namespace {

Rational fractional_part(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - f;
}

// Representatives of L/Z^m with coordinates in [0, 1), found by closing the
// extra generators under addition mod 1.
std::vector<RatVector> coset_representatives(const EnlargedLattice& lattice, std::size_t cap) {
  const std::size_t m = lattice.dimension();
  std::vector<RatVector> reps{RatVector(m)};
  std::set<RatVector> seen{reps.front()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& g : lattice.extra_generators()) {
      RatVector next(m);
      for (std::size_t j = 0; j < m; ++j) next[j] = fractional_part(reps[i][j] + g.coords[j]);
      if (!seen.insert(next).second) continue;
      if (reps.size() >= cap) throw BudgetExceeded("too many cosets of Z^m in the lattice");
      reps.push_back(std::move(next));
    }
  }
  return reps;
}

// g(k/D) − k/D − c ∈ Z^m, scaled by Q:
//   Σ_j coeff[i][j]·k_j + offset[i] − shift_c[i] ≡ 0 (mod Q)  for every row i.
struct GridEquations {
  std::size_t m = 0;
  std::int64_t denominator = 0;
  std::int64_t modulus = 0;
  std::vector<std::vector<std::int64_t>> coeff;
  std::vector<std::int64_t> offset;
  std::vector<std::vector<std::int64_t>> coset_shift;
  // Grid translations D·c mod D for the cosets that map the grid to itself.
  std::vector<std::vector<std::int64_t>> grid_shift;

  GridEquations(const AffineAuto& g, const EnlargedLattice& lattice, std::size_t d) {
    if (d < 1) throw std::invalid_argument("torsion oracle: denominator must be at least 1");
    m = lattice.dimension();
    denominator = static_cast<std::int64_t>(d);
    const auto cosets = coset_representatives(lattice, 1u << 20);

    Integer q = denominator;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) q = lcm(q, denominator * Integer(g.linear(i, j).get_den()));
    for (const auto& t : g.translation.coords) q = lcm(q, Integer(t.get_den()));
    for (const auto& c : cosets)
      for (const auto& x : c) q = lcm(q, Integer(x.get_den()));

    Integer bound = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) bound += Rational(abs(g.linear(i, j))).get_num() + 1;
    if (!(q * bound * denominator < Integer(std::numeric_limits<std::int64_t>::max() / 4)))
      throw std::overflow_error("torsion oracle: scaled problem exceeds machine integers");
    modulus = q.get_si();

    auto to_int = [&](const Rational& x) {
      const Rational scaled = x * q;
      return scaled.get_num().get_si();
    };
    coeff.assign(m, std::vector<std::int64_t>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational a = g.linear(i, j) - (i == j ? 1 : 0);
        coeff[i][j] = to_int(a / denominator);
      }
    offset.resize(m);
    for (std::size_t i = 0; i < m; ++i) offset[i] = to_int(g.translation.coords[i]);
    for (const auto& c : cosets) {
      std::vector<std::int64_t> shift(m);
      for (std::size_t i = 0; i < m; ++i) shift[i] = to_int(c[i]);
      coset_shift.push_back(shift);

      bool on_grid = true;
      std::vector<std::int64_t> grid(m);
      for (std::size_t i = 0; i < m; ++i) {
        const Rational x = c[i] * denominator;
        if (x.get_den() != 1) on_grid = false;
        else grid[i] = x.get_num().get_si() % denominator;
      }
      bool zero = std::all_of(grid.begin(), grid.end(), [](std::int64_t v) { return v == 0; });
      if (on_grid && !zero) grid_shift.push_back(grid);
    }
  }

  std::int64_t residue(std::size_t row, std::size_t coset, const std::vector<std::int64_t>& k) const {
    std::int64_t acc = offset[row] - coset_shift[coset][row];
    for (std::size_t j = 0; j < m; ++j) acc += coeff[row][j] * k[j];
    acc %= modulus;
    return acc < 0 ? acc + modulus : acc;
  }

  bool fixed(const std::vector<std::int64_t>& k) const {
    for (std::size_t c = 0; c < coset_shift.size(); ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) ok = residue(i, c, k) == 0;
      if (ok) return true;
    }
    return false;
  }

  // k is the lexicographically smallest grid point of its class mod L.
  bool is_class_minimum(const std::vector<std::int64_t>& k) const {
    for (const auto& shift : grid_shift) {
      for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t moved = (k[i] + shift[i]) % denominator;
        if (moved < k[i]) return false;
        if (moved > k[i]) break;
      }
    }
    return true;
  }

  TorsionPoint to_point(const std::vector<std::int64_t>& k) const {
    TorsionPoint p(m);
    for (std::size_t i = 0; i < m; ++i) p.coords[i] = make_rational(static_cast<long>(k[i]), static_cast<long>(denominator));
    return p;
  }
};

}  // namespace

std::vector<TorsionPoint> torsion_fixed_points_bruteforce(const AffineAuto& g, const EnlargedLattice& lattice,
                                                          std::size_t denominator, std::size_t budget) {
  if (denominator < 1) throw std::invalid_argument("torsion_fixed_points_bruteforce: denominator must be at least 1");
  Integer grid = 1;
  for (std::size_t i = 0; i < lattice.dimension(); ++i) grid *= static_cast<unsigned long>(denominator);
  const Integer count = grid / lattice.index();
  if (count > Integer(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("enumeration of " + count.get_str() + " torsion points exceeds budget " +
                         std::to_string(budget));

  const GridEquations eq(g, lattice, denominator);
  std::vector<TorsionPoint> found;
  std::vector<std::int64_t> k(eq.m, 0);
  while (true) {
    if (eq.is_class_minimum(k) && eq.fixed(k)) found.push_back(eq.to_point(k));
    std::size_t i = eq.m;
    while (i > 0) {
      --i;
      if (++k[i] < eq.denominator) break;
      k[i] = 0;
      if (i == 0) return found;
    }
  }
}

std::optional<TorsionPoint> find_torsion_fixed_point(const AffineAuto& g, const EnlargedLattice& lattice,
                                                     std::size_t denominator) {
  const GridEquations eq(g, lattice, denominator);
  const std::size_t m = eq.m;

  // Row i can be checked once every variable it involves is assigned.
  std::vector<std::vector<std::size_t>> ready_after(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t last = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (eq.coeff[i][j] != 0) last = j + 1;
    ready_after[last].push_back(i);
  }

  for (std::size_t c = 0; c < eq.coset_shift.size(); ++c) {
    std::vector<std::int64_t> k(m, 0);
    auto rows_hold = [&](std::size_t level) {
      for (auto i : ready_after[level])
        if (eq.residue(i, c, k) != 0) return false;
      return true;
    };
    if (!rows_hold(0)) continue;

    // Iterative depth-first search; level v means k[0..v) are assigned.
    std::size_t v = 0;
    k[0] = -1;
    while (true) {
      if (++k[v] >= eq.denominator) {
        if (v == 0) break;
        --v;
        continue;
      }
      if (!rows_hold(v + 1)) continue;
      if (v + 1 == m) return eq.to_point(k);
      ++v;
      k[v] = -1;
    }
  }
  return std::nullopt;
}

}  // namespace dihedral
