// The dihedral action of order 8n on A = (E^{2n} × E′)/⟨w⟩, its
// step-by-step verification, and the embedded actions of arbitrary dihedral
// groups obtained from rotation powers.
//
// With z = (z_1, ..., z_{2n+1}):
//   w    = (1/2, ..., 1/2, 0)
//   r(z) = (−z_{2n}, z_1, ..., z_{2n−1}, z_{2n+1} + 1/(4n))
//   s(z) = (−z_{2n} + b_1, −z_{2n−1} + b_2, ..., −z_1 + b_{2n}, −z_{2n+1})
// where b_{2i−1} = 1/2 + τ/2 and b_{2i} = τ/2.

#pragma once

#include "dihedral/action_analysis.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dihedral {

struct ConstructionParams {
  int n = 1;
  void validate() const;
};

/// Switches for the negative controls.  The default is the real construction.
struct ConstructionVariant {
  bool rotation_shift = true;    // the 1/(4n) shift in the E′ coordinate of r
  bool reflection_shift = true;  // the b_i translations of s
  bool quotient_by_w = true;     // work on A rather than on E^{2n} × E′
};

TorsionPoint build_w(int n);
/// b_1..b_{2n}, each a (1-part, τ-part) pair.
std::vector<TorsionPoint> build_b(int n);
ComplexMonomialMap build_r(int n, const ConstructionVariant& variant = {});
ComplexMonomialMap build_s(int n, const ConstructionVariant& variant = {});

/// Z^m + Z·w, or plain Z^m when the variant skips the quotient.
EnlargedLattice build_lattice(int n, const ConstructionVariant& variant = {});

struct DihedralAction {
  TorusShape shape;
  EnlargedLattice cover;     // Z^m
  EnlargedLattice lattice;   // the lattice the group acts modulo
  TorsionPoint w;
  AffineAuto r;  // translations reduced modulo `lattice`
  AffineAuto s;
  AffineAuto r_cover;  // the same maps on E^{2n} × E′, reduced modulo Z^m
  AffineAuto s_cover;
};

DihedralAction build_action(const ConstructionParams& params, const ConstructionVariant& variant = {});

/// Default caps: closure 4·8n, orders 8·4n.
AnalysisCaps default_caps(int n);

struct RotationStep {
  std::size_t rotation_order = 0;      // on the acting lattice
  std::size_t cover_order = 0;         // on Z^m
  std::size_t linear_order = 0;        // of R alone
  bool linear_fixes_w = false;         // R(w) = w
  bool powers_free = false;            // r^j has no fixed point, 0 < j < 4n
  bool powers_not_translations = false;
  bool last_coordinate_shift = false;  // E′ part of r^j(z) − z is j/(4n)
  bool passed = false;
};

struct ReflectionStep {
  bool square_is_w_translation = false;  // s² = t_w on E^{2n} × E′
  bool linear_fixes_w = false;           // S(w) = w
  std::size_t order = 0;                 // of s on the acting lattice
  bool passed = false;
};

struct RelationStep {
  bool rotation_relation = false;  // r^{4n} = 1
  bool reflection_relation = false;  // s² = 1
  bool product_relation = false;  // (rs)² = 1
  std::size_t product_order = 0;
  std::size_t group_order = 0;
  bool passed = false;
};

struct SymmetryStep {
  /// Classes of r^a·s under conjugation.  Recorded only; freeness of every
  /// symmetry is checked element by element below.
  std::size_t class_count = 0;
  bool s_not_translation = false;
  bool rs_not_translation = false;
  bool all_symmetries_free = false;
  bool no_symmetry_is_translation = false;
  bool passed = false;
};

struct FreenessStep {
  bool s_free = false;
  bool rs_free = false;
  bool passed = false;
};

struct TheoremCertificate {
  int n = 0;
  std::size_t dimension = 0;
  std::size_t group_order_expected = 0;
  std::size_t group_order_actual = 0;
  RotationStep step1;
  ReflectionStep step2;
  RelationStep step3;
  SymmetryStep step4;
  FreenessStep step5;
  bool is_free = false;
  bool has_no_translations = false;
  std::vector<ElementReport> elements;
  /// Set when a cap was hit; every step then reports failure.
  std::string failure;
  bool theorem_verified = false;
};

TheoremCertificate verify_theorem(const ConstructionParams& params, const ConstructionVariant& variant = {});
TheoremCertificate verify_theorem(const ConstructionParams& params, const ConstructionVariant& variant,
                                  const AnalysisCaps& caps);

/// D_k inside D_{4n} for 4n = lcm(4, k), generated by r^{4n/k} and s.
struct CorollaryPlan {
  int k = 1;
  ConstructionParams params;
  std::size_t rotation_power = 1;
  std::size_t expected_dimension = 0;
  std::size_t expected_order = 0;
};

CorollaryPlan build_corollary(int k);
std::vector<AffineAuto> corollary_generators(const CorollaryPlan& plan, const DihedralAction& action);

struct CorollaryCertificate {
  CorollaryPlan plan;
  std::size_t ambient_dimension = 0;
  std::size_t subgroup_order = 0;
  bool dimension_matches = false;
  bool order_matches = false;
  bool relations_hold = false;  // D_k presentation with rotation r^{4n/k}
  bool is_free = false;
  bool has_no_translations = false;
  std::vector<ElementReport> elements;
  std::string failure;
  bool verified = false;
};

CorollaryCertificate verify_corollary(int k);
CorollaryCertificate verify_corollary(int k, const AnalysisCaps& caps);

}  // namespace dihedral
