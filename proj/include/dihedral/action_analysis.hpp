// Exact decisions about finite groups of affine torus automorphisms: element
// orders, translations, fixed points, closure and conjugacy classes, plus a
// brute-force torsion-point oracle for the fixed-point decision.

#pragma once

#include "dihedral/torus_model.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dihedral {

/// Raised when an order computation or closure grows past its cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a brute-force enumeration would visit more points than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// r^rotation · s^reflection
struct WordLabel {
  std::size_t rotation = 0;
  std::size_t reflection = 0;

  /// "", "r", "r^3", "s", "r^2 s"; parseable as a group word.
  std::string to_string() const;
  auto operator<=>(const WordLabel&) const = default;
};

struct GroupElement {
  AffineAuto map;
  std::optional<WordLabel> word;
};

struct ElementReport {
  std::optional<WordLabel> word;
  std::size_t order = 1;
  bool is_translation = false;
  bool has_fixed_point = true;
};

/// A finite group of canonical automorphisms modulo a fixed lattice.
class FiniteGroup {
 public:
  FiniteGroup(EnlargedLattice lattice, std::vector<AffineAuto> elements);

  const EnlargedLattice& lattice() const { return lattice_; }
  const std::vector<AffineAuto>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const AffineAuto& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const AffineAuto& g) const;

 private:
  EnlargedLattice lattice_;
  std::vector<AffineAuto> elements_;
  std::map<RatVector, std::size_t> index_;
};

/// Smallest k ≥ 1 with g^k = id modulo the lattice.  Throws CapExceeded past cap.
std::size_t order(const AffineAuto& g, const EnlargedLattice& lattice, std::size_t cap);

/// Identity linear part and a translation outside the lattice.  The identity
/// itself is never a translation.
bool is_translation(const AffineAuto& g, const EnlargedLattice& lattice);

/// Whether g(z) = z has a solution on R^m / L.
bool exists_fixed_point(const AffineAuto& g, const EnlargedLattice& lattice);

/// Breadth-first closure of gens under composition, starting from the
/// identity.  Discovery order is deterministic: elements are expanded in BFS
/// order and right-multiplied by the generators in the order given.
FiniteGroup closure(const std::vector<AffineAuto>& gens, const EnlargedLattice& lattice, std::size_t cap);

/// Orbits of g ↦ h·g·h⁻¹, as index lists into the group, each sorted, listed
/// by smallest member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group);

/// Every point of (1/D)Z^m modulo L that g fixes.  Each returned point is
/// the lexicographically smallest grid representative of its class mod L.
/// Refuses with BudgetExceeded when D^m / [L : Z^m] exceeds the budget.
std::vector<TorsionPoint> torsion_fixed_points_bruteforce(const AffineAuto& g, const EnlargedLattice& lattice,
                                                          std::size_t denominator,
                                                          std::size_t budget = 10'000'000);

/// Exhaustive search of the same grid for a single fixed point.  A partial
/// assignment is abandoned as soon as a coordinate equation whose variables
/// are all assigned fails, so grids far beyond the brute-force budget are
/// feasible for signed-permutation linear parts.
std::optional<TorsionPoint> find_torsion_fixed_point(const AffineAuto& g, const EnlargedLattice& lattice,
                                                     std::size_t denominator);

struct AnalysisCaps {
  std::size_t closure = 1024;
  std::size_t order = 1024;
};

struct GroupAnalysis {
  FiniteGroup group;
  /// Reports in group order, or sorted by word label when the group is dihedral.
  std::vector<ElementReport> reports;
  /// reports[i] describes group[report_element[i]].
  std::vector<std::size_t> report_element;
  std::size_t group_size = 0;
  bool is_free = false;
  bool has_no_translations = false;
  /// gens = {r, s} satisfy r^k = s² = (rs)² = 1 with k = group_size/2.
  bool dihedral_shape = false;
  std::size_t rotation_order = 0;
  /// Conjugacy classes of the elements r^a·s (dihedral groups only).
  std::size_t reflection_class_count = 0;
};

/// Closure of gens followed by a per-element report.  When gens = {r, s}
/// generate a dihedral group every element gets its r^a·s^b label.
GroupAnalysis analyze_group(const std::vector<AffineAuto>& gens, const EnlargedLattice& lattice,
                            const AnalysisCaps& caps);

}  // namespace dihedral
