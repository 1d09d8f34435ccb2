// Lattice-coordinate model of products of elliptic curves and their
// quotients by finite subgroups of torsion points.
//
// Complex coordinate i (0-based) of a point lives in real slots 2i and 2i+1
// as (p, q), meaning p + q·τ_i, where τ_i is the period of that factor.  The
// periods are never evaluated: every object handled here is a torsion point,
// so exact rational lattice coordinates describe it for every choice of
// curves at once.

#pragma once

#include "dihedral/exact_linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dihedral {

enum class FactorKind { E, EPrime };

/// E^{2n} × E′: 2n copies of E followed by a single E′ coordinate.
class TorusShape {
 public:
  explicit TorusShape(int n);

  int n() const { return n_; }
  std::size_t complex_dim() const { return 2 * static_cast<std::size_t>(n_) + 1; }
  std::size_t real_dim() const { return 2 * complex_dim(); }
  FactorKind factor_kind(std::size_t coordinate) const;

 private:
  int n_;
};

/// A rational point of R^m, read modulo some lattice.
struct TorsionPoint {
  RatVector coords;

  TorsionPoint() = default;
  explicit TorsionPoint(std::size_t m) : coords(m) {}
  explicit TorsionPoint(RatVector c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  /// "(p/q, p/q, ...)"
  std::string to_string() const;

  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
};

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b);
TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b);
TorsionPoint operator*(const Rational& k, const TorsionPoint& a);

/// Period lattice Z^m + Σ Z·g over a list of extra rational generators g.
///
/// The canonical basis is the Hermite form of all generators cleared to the
/// common denominator d; basis row i is h.row(i)/d and is upper triangular
/// with positive diagonal.
class EnlargedLattice {
 public:
  static EnlargedLattice standard(std::size_t m);
  static EnlargedLattice with_extra_generators(std::size_t m, std::vector<TorsionPoint> extras);

  std::size_t dimension() const { return m_; }
  const std::vector<TorsionPoint>& extra_generators() const { return extras_; }
  /// Standard basis vectors first, then the extras.
  std::vector<RatVector> generators() const;
  const IntMatrix& canonical_basis() const { return basis_; }
  const Integer& denominator() const { return denominator_; }
  /// [L : Z^m]
  Integer index() const;

  /// Representative of p in the half-open parallelepiped spanned by the
  /// canonical basis: every basis coefficient lies in [0, 1).
  TorsionPoint reduce(std::span<const Rational> p) const;
  TorsionPoint reduce(const TorsionPoint& p) const { return reduce(p.coords); }
  bool contains(std::span<const Rational> p) const;
  bool contains(const TorsionPoint& p) const { return contains(p.coords); }

 private:
  EnlargedLattice(std::size_t m, std::vector<TorsionPoint> extras);
  RatVector basis_coefficients(std::span<const Rational> p) const;

  std::size_t m_;
  std::vector<TorsionPoint> extras_;
  IntMatrix basis_;
  Integer denominator_;
};

/// z ↦ (signs[j]·z[source[j]] + t_j)_j on complex coordinates.
struct ComplexMonomialMap {
  std::vector<std::size_t> source;
  std::vector<int> signs;
  TorsionPoint translation;  // real_dim entries

  static ComplexMonomialMap identity(const TorusShape& shape);

  /// Throws std::invalid_argument unless source is a permutation that keeps
  /// the E′ coordinate in place, signs are ±1 and sizes match the shape.
  void validate(const TorusShape& shape) const;
};

/// f∘g at the complex-coordinate level.
ComplexMonomialMap compose(const ComplexMonomialMap& f, const ComplexMonomialMap& g);

/// z ↦ M·z + t on R^m modulo a lattice.
struct AffineAuto {
  RatMatrix linear;
  TorsionPoint translation;

  static AffineAuto identity(std::size_t m);
  std::size_t dimension() const { return linear.rows(); }
  RatVector apply(std::span<const Rational> z) const;

  friend bool operator==(const AffineAuto&, const AffineAuto&) = default;
};

/// Realified matrix: block (j, source[j]) is signs[j]·I₂.  The translation is
/// reduced modulo Z^m, which is contained in every enlarged lattice.
AffineAuto realify(const ComplexMonomialMap& map, const TorusShape& shape);
AffineAuto realify(const ComplexMonomialMap& map, const TorusShape& shape, const EnlargedLattice& lattice);

/// Same map with its translation reduced modulo the lattice.
AffineAuto canonicalize(const AffineAuto& g, const EnlargedLattice& lattice);

/// g∘h = (M_g·M_h, M_g·t_h + t_g) with the translation reduced.
AffineAuto compose(const AffineAuto& g, const AffineAuto& h, const EnlargedLattice& lattice);
AffineAuto inverse(const AffineAuto& g, const EnlargedLattice& lattice);
/// g^k for k ≥ 0.
AffineAuto power(const AffineAuto& g, std::size_t k, const EnlargedLattice& lattice);

/// Same linear part and translations differing by a lattice vector.
bool equal_mod_lattice(const AffineAuto& g, const AffineAuto& h, const EnlargedLattice& lattice);

/// M maps every lattice generator into the lattice and det M = ±1, so M
/// restricts to an automorphism of the lattice.
bool preserves_lattice(const RatMatrix& linear, const EnlargedLattice& lattice);

}  // namespace dihedral
