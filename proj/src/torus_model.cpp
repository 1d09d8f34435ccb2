#include "dihedral/torus_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace dihedral {

namespace {

Rational floor_of(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

TorusShape::TorusShape(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("TorusShape: n must be at least 1");
}

FactorKind TorusShape::factor_kind(std::size_t coordinate) const {
  if (coordinate >= complex_dim()) throw std::out_of_range("TorusShape::factor_kind");
  return coordinate + 1 == complex_dim() ? FactorKind::EPrime : FactorKind::E;
}

bool TorsionPoint::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::string TorsionPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += to_fraction_string(coords[i]);
  }
  return out + ")";
}

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
  require_same_size(a.size(), b.size(), "TorsionPoint +");
  TorsionPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.coords[i] + b.coords[i];
  return out;
}

TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b) {
  require_same_size(a.size(), b.size(), "TorsionPoint -");
  TorsionPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.coords[i] - b.coords[i];
  return out;
}

TorsionPoint operator*(const Rational& k, const TorsionPoint& a) {
  TorsionPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = k * a.coords[i];
  return out;
}

// --- EnlargedLattice -------------------------------------------------------

EnlargedLattice::EnlargedLattice(std::size_t m, std::vector<TorsionPoint> extras)
    : m_(m), extras_(std::move(extras)) {
  if (m == 0) throw std::invalid_argument("EnlargedLattice: dimension must be positive");
  for (const auto& g : extras_) require_same_size(g.size(), m, "EnlargedLattice");

  const auto gens = generators();
  denominator_ = 1;
  for (const auto& g : gens) denominator_ = lcm(denominator_, common_denominator(g));

  IntMatrix scaled(gens.size(), m);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational x = gens[i][j] * denominator_;
      scaled(i, j) = x.get_num();
    }
  const HermiteDecomposition form = hnf(scaled);
  // Z^m is among the generators, so the rank is always m and the pivots sit
  // on the diagonal.
  basis_ = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) basis_(i, j) = form.h(i, j);
}

EnlargedLattice EnlargedLattice::standard(std::size_t m) { return EnlargedLattice(m, {}); }

EnlargedLattice EnlargedLattice::with_extra_generators(std::size_t m, std::vector<TorsionPoint> extras) {
  return EnlargedLattice(m, std::move(extras));
}

std::vector<RatVector> EnlargedLattice::generators() const {
  std::vector<RatVector> gens;
  gens.reserve(m_ + extras_.size());
  for (std::size_t i = 0; i < m_; ++i) {
    RatVector e(m_);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto& g : extras_) gens.push_back(g.coords);
  return gens;
}

Integer EnlargedLattice::index() const {
  Integer volume = 1;
  for (std::size_t i = 0; i < m_; ++i) volume *= basis_(i, i);
  Integer full = 1;
  for (std::size_t i = 0; i < m_; ++i) full *= denominator_;
  return full / volume;
}

RatVector EnlargedLattice::basis_coefficients(std::span<const Rational> p) const {
  require_same_size(p.size(), m_, "EnlargedLattice");
  // Forward substitution against the upper-triangular basis.
  RatVector c(m_);
  for (std::size_t j = 0; j < m_; ++j) {
    Rational acc = p[j] * denominator_;
    for (std::size_t i = 0; i < j; ++i)
      if (sgn(basis_(i, j)) != 0) acc -= c[i] * basis_(i, j);
    c[j] = acc / basis_(j, j);
  }
  return c;
}

TorsionPoint EnlargedLattice::reduce(std::span<const Rational> p) const {
  RatVector c = basis_coefficients(p);
  TorsionPoint out(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    c[i] -= floor_of(c[i]);
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = i; j < m_; ++j)
      if (sgn(basis_(i, j)) != 0) out.coords[j] += c[i] * basis_(i, j);
  }
  for (auto& x : out.coords) x /= denominator_;
  return out;
}

bool EnlargedLattice::contains(std::span<const Rational> p) const {
  const RatVector c = basis_coefficients(p);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.get_den() == 1; });
}

// --- ComplexMonomialMap ----------------------------------------------------

ComplexMonomialMap ComplexMonomialMap::identity(const TorusShape& shape) {
  ComplexMonomialMap map;
  for (std::size_t j = 0; j < shape.complex_dim(); ++j) map.source.push_back(j);
  map.signs.assign(shape.complex_dim(), 1);
  map.translation = TorsionPoint(shape.real_dim());
  return map;
}

void ComplexMonomialMap::validate(const TorusShape& shape) const {
  const std::size_t k = shape.complex_dim();
  if (source.size() != k || signs.size() != k || translation.size() != shape.real_dim())
    throw std::invalid_argument("ComplexMonomialMap: size does not match torus shape");
  std::vector<bool> seen(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    if (source[j] >= k || seen[source[j]]) throw std::invalid_argument("ComplexMonomialMap: source is not a permutation");
    seen[source[j]] = true;
    if (shape.factor_kind(j) != shape.factor_kind(source[j]))
      throw std::invalid_argument("ComplexMonomialMap: permutation mixes E and E' factors");
    if (signs[j] != 1 && signs[j] != -1) throw std::invalid_argument("ComplexMonomialMap: signs must be +1 or -1");
  }
}

ComplexMonomialMap compose(const ComplexMonomialMap& f, const ComplexMonomialMap& g) {
  const std::size_t k = f.source.size();
  require_same_size(g.source.size(), k, "compose");
  ComplexMonomialMap out;
  out.source.resize(k);
  out.signs.resize(k);
  out.translation = f.translation;
  // (f∘g)_j = f.sign_j·(g.sign_σ·z_{g.src(σ)} + g.t_σ) + f.t_j with σ = f.src(j)
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t via = f.source[j];
    out.source[j] = g.source[via];
    out.signs[j] = f.signs[j] * g.signs[via];
    for (std::size_t part = 0; part < 2; ++part)
      out.translation.coords[2 * j + part] += f.signs[j] * g.translation.coords[2 * via + part];
  }
  return out;
}

// --- AffineAuto ------------------------------------------------------------

AffineAuto AffineAuto::identity(std::size_t m) { return {RatMatrix::identity(m), TorsionPoint(m)}; }

RatVector AffineAuto::apply(std::span<const Rational> z) const {
  RatVector out = multiply(linear, z);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation.coords[i];
  return out;
}

AffineAuto realify(const ComplexMonomialMap& map, const TorusShape& shape) {
  return realify(map, shape, EnlargedLattice::standard(shape.real_dim()));
}

AffineAuto realify(const ComplexMonomialMap& map, const TorusShape& shape, const EnlargedLattice& lattice) {
  map.validate(shape);
  require_same_size(lattice.dimension(), shape.real_dim(), "realify");
  const std::size_t m = shape.real_dim();
  RatMatrix linear(m, m);
  for (std::size_t j = 0; j < shape.complex_dim(); ++j) {
    const std::size_t i = map.source[j];
    linear(2 * j, 2 * i) = map.signs[j];
    linear(2 * j + 1, 2 * i + 1) = map.signs[j];
  }
  return {std::move(linear), lattice.reduce(map.translation)};
}

AffineAuto canonicalize(const AffineAuto& g, const EnlargedLattice& lattice) {
  return {g.linear, lattice.reduce(g.translation)};
}

AffineAuto compose(const AffineAuto& g, const AffineAuto& h, const EnlargedLattice& lattice) {
  require_same_size(g.dimension(), h.dimension(), "compose");
  require_same_size(g.dimension(), lattice.dimension(), "compose");
  RatVector t = g.apply(h.translation.coords);
  return {multiply(g.linear, h.linear), lattice.reduce(t)};
}

AffineAuto inverse(const AffineAuto& g, const EnlargedLattice& lattice) {
  RatMatrix inv = dihedral::inverse(g.linear);
  RatVector t = multiply(inv, g.translation.coords);
  for (auto& x : t) x = -x;
  return {std::move(inv), lattice.reduce(t)};
}

AffineAuto power(const AffineAuto& g, std::size_t k, const EnlargedLattice& lattice) {
  AffineAuto out = AffineAuto::identity(g.dimension());
  for (std::size_t i = 0; i < k; ++i) out = compose(out, g, lattice);
  return out;
}

bool equal_mod_lattice(const AffineAuto& g, const AffineAuto& h, const EnlargedLattice& lattice) {
  if (g.linear != h.linear) return false;
  return lattice.contains((g.translation - h.translation).coords);
}

bool preserves_lattice(const RatMatrix& linear, const EnlargedLattice& lattice) {
  if (linear.rows() != lattice.dimension() || linear.cols() != lattice.dimension()) return false;
  const Rational det = determinant(linear);
  if (det != 1 && det != -1) return false;
  for (const auto& g : lattice.generators())
    if (!lattice.contains(multiply(linear, g))) return false;
  return true;
}

}  // namespace dihedral
