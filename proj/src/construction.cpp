#include "dihedral/construction.hpp"

#include <numeric>
#include <stdexcept>

namespace dihedral {

void ConstructionParams::validate() const {
  if (n < 1) throw std::invalid_argument("construction parameter n must be at least 1");
}

TorsionPoint build_w(int n) {
  const TorusShape shape(n);
  TorsionPoint w(shape.real_dim());
  for (std::size_t i = 0; i + 1 < shape.complex_dim(); ++i) w.coords[2 * i] = make_rational(1, 2);
  return w;
}

std::vector<TorsionPoint> build_b(int n) {
  const TorusShape shape(n);
  std::vector<TorsionPoint> b;
  for (int i = 1; i <= 2 * n; ++i) {
    // b_{2i−1} = 1/2 + τ/2, b_{2i} = τ/2
    if (i % 2 == 1) b.push_back(TorsionPoint(RatVector{make_rational(1, 2), make_rational(1, 2)}));
    else b.push_back(TorsionPoint(RatVector{make_rational(0), make_rational(1, 2)}));
  }
  return b;
}

ComplexMonomialMap build_r(int n, const ConstructionVariant& variant) {
  const TorusShape shape(n);
  const std::size_t last = shape.complex_dim() - 1;  // the E′ coordinate, index 2n
  ComplexMonomialMap r = ComplexMonomialMap::identity(shape);
  r.source[0] = last - 1;
  r.signs[0] = -1;
  for (std::size_t j = 1; j < last; ++j) r.source[j] = j - 1;
  if (variant.rotation_shift) r.translation.coords[2 * last] = make_rational(1, 4L * n);
  return r;
}

ComplexMonomialMap build_s(int n, const ConstructionVariant& variant) {
  const TorusShape shape(n);
  const std::size_t last = shape.complex_dim() - 1;
  ComplexMonomialMap s = ComplexMonomialMap::identity(shape);
  const auto b = build_b(n);
  for (std::size_t j = 0; j < last; ++j) {
    s.source[j] = last - 1 - j;
    s.signs[j] = -1;
    if (variant.reflection_shift) {
      s.translation.coords[2 * j] = b[j].coords[0];
      s.translation.coords[2 * j + 1] = b[j].coords[1];
    }
  }
  s.signs[last] = -1;
  return s;
}

EnlargedLattice build_lattice(int n, const ConstructionVariant& variant) {
  const TorusShape shape(n);
  if (!variant.quotient_by_w) return EnlargedLattice::standard(shape.real_dim());
  return EnlargedLattice::with_extra_generators(shape.real_dim(), {build_w(n)});
}

DihedralAction build_action(const ConstructionParams& params, const ConstructionVariant& variant) {
  params.validate();
  const TorusShape shape(params.n);
  EnlargedLattice lattice = build_lattice(params.n, variant);
  const ComplexMonomialMap r = build_r(params.n, variant);
  const ComplexMonomialMap s = build_s(params.n, variant);
  return {shape,
          EnlargedLattice::standard(shape.real_dim()),
          lattice,
          build_w(params.n),
          realify(r, shape, lattice),
          realify(s, shape, lattice),
          realify(r, shape),
          realify(s, shape)};
}

AnalysisCaps default_caps(int n) {
  const auto size = static_cast<std::size_t>(n);
  return {4 * 8 * size, 8 * 4 * size};
}

namespace {

bool is_identity_mod(const AffineAuto& g, const EnlargedLattice& lattice) {
  return g.linear.is_identity() && lattice.contains(g.translation);
}

bool linear_fixes(const RatMatrix& linear, const TorsionPoint& p, const EnlargedLattice& lattice) {
  return lattice.contains((TorsionPoint(multiply(linear, p.coords)) - p).coords);
}

// The E′ block of g is z ↦ z + shift: identity on its own block, nothing
// feeding in from the E coordinates, and 1-part translation ≡ shift mod 1.
bool eprime_shift_is(const AffineAuto& g, const TorusShape& shape, const Rational& shift) {
  const std::size_t base = 2 * (shape.complex_dim() - 1);
  for (std::size_t i = base; i < base + 2; ++i)
    for (std::size_t j = 0; j < g.dimension(); ++j)
      if (g.linear(i, j) != (i == j ? 1 : 0)) return false;
  const TorsionPoint t = EnlargedLattice::standard(g.dimension()).reduce(g.translation);
  Rational expected = shift;
  while (expected >= 1) expected -= 1;
  return t.coords[base] == expected && sgn(t.coords[base + 1]) == 0;
}

RotationStep check_rotation(const DihedralAction& action, const AnalysisCaps& caps) {
  const int n = action.shape.n();
  const std::size_t four_n = 4 * static_cast<std::size_t>(n);
  const AffineAuto& r_cover = action.r_cover;
  const AffineAuto linear_only{action.r.linear, TorsionPoint(action.r.dimension())};

  RotationStep step;
  step.rotation_order = order(action.r, action.lattice, caps.order);
  step.cover_order = order(r_cover, action.cover, caps.order);
  step.linear_order = order(linear_only, action.cover, caps.order);
  step.linear_fixes_w = linear_fixes(action.r.linear, action.w, action.cover);

  step.powers_free = true;
  step.powers_not_translations = true;
  step.last_coordinate_shift = true;
  AffineAuto on_lattice = action.r;
  AffineAuto on_cover = r_cover;
  for (std::size_t j = 1; j < four_n; ++j) {
    if (exists_fixed_point(on_lattice, action.lattice)) step.powers_free = false;
    if (is_translation(on_lattice, action.lattice)) step.powers_not_translations = false;
    if (!eprime_shift_is(on_cover, action.shape, make_rational(static_cast<long>(j), static_cast<long>(four_n))))
      step.last_coordinate_shift = false;
    on_lattice = compose(on_lattice, action.r, action.lattice);
    on_cover = compose(on_cover, r_cover, action.cover);
  }
  step.passed = step.rotation_order == four_n && step.cover_order == four_n && step.linear_order == four_n &&
                step.linear_fixes_w && step.powers_free && step.powers_not_translations &&
                step.last_coordinate_shift;
  return step;
}

ReflectionStep check_reflection(const DihedralAction& action, const AnalysisCaps& caps) {
  const AffineAuto& s_cover = action.s_cover;
  const AffineAuto square = compose(s_cover, s_cover, action.cover);
  const AffineAuto w_translation{RatMatrix::identity(action.s.dimension()), action.w};

  ReflectionStep step;
  step.square_is_w_translation = equal_mod_lattice(square, w_translation, action.cover);
  step.linear_fixes_w = linear_fixes(action.s.linear, action.w, action.cover);
  step.order = order(action.s, action.lattice, caps.order);
  step.passed = step.square_is_w_translation && step.linear_fixes_w && step.order == 2;
  return step;
}

RelationStep check_relations(const DihedralAction& action, const GroupAnalysis& analysis, const AnalysisCaps& caps) {
  const std::size_t four_n = 4 * static_cast<std::size_t>(action.shape.n());
  const auto& lattice = action.lattice;
  const AffineAuto rs = compose(action.r, action.s, lattice);

  RelationStep step;
  step.rotation_relation = is_identity_mod(power(action.r, four_n, lattice), lattice);
  step.reflection_relation = is_identity_mod(compose(action.s, action.s, lattice), lattice);
  step.product_relation = is_identity_mod(compose(rs, rs, lattice), lattice);
  step.product_order = order(rs, lattice, caps.order);
  step.group_order = analysis.group_size;
  step.passed = step.rotation_relation && step.reflection_relation && step.product_relation &&
                step.product_order == 2 && step.group_order == 2 * four_n && analysis.dihedral_shape;
  return step;
}

SymmetryStep check_symmetries(const DihedralAction& action, const GroupAnalysis& analysis) {
  const auto& lattice = action.lattice;
  SymmetryStep step;
  step.class_count = analysis.reflection_class_count;
  step.s_not_translation = !is_translation(action.s, lattice);
  step.rs_not_translation = !is_translation(compose(action.r, action.s, lattice), lattice);

  std::size_t symmetries = 0;
  step.all_symmetries_free = true;
  step.no_symmetry_is_translation = true;
  for (const auto& report : analysis.reports) {
    if (!report.word || report.word->reflection != 1) continue;
    ++symmetries;
    if (report.has_fixed_point) step.all_symmetries_free = false;
    if (report.is_translation) step.no_symmetry_is_translation = false;
  }
  if (symmetries != 4 * static_cast<std::size_t>(action.shape.n())) {
    step.all_symmetries_free = false;
    step.no_symmetry_is_translation = false;
  }
  step.passed = step.s_not_translation && step.rs_not_translation && step.all_symmetries_free &&
                step.no_symmetry_is_translation;
  return step;
}

FreenessStep check_freeness(const DihedralAction& action) {
  const auto& lattice = action.lattice;
  FreenessStep step;
  step.s_free = !exists_fixed_point(action.s, lattice);
  step.rs_free = !exists_fixed_point(compose(action.r, action.s, lattice), lattice);
  step.passed = step.s_free && step.rs_free;
  return step;
}

}  // namespace

TheoremCertificate verify_theorem(const ConstructionParams& params, const ConstructionVariant& variant) {
  params.validate();
  return verify_theorem(params, variant, default_caps(params.n));
}

TheoremCertificate verify_theorem(const ConstructionParams& params, const ConstructionVariant& variant,
                                  const AnalysisCaps& caps) {
  params.validate();
  TheoremCertificate cert;
  cert.n = params.n;
  cert.dimension = 2 * static_cast<std::size_t>(params.n) + 1;
  cert.group_order_expected = 8 * static_cast<std::size_t>(params.n);

  const DihedralAction action = build_action(params, variant);
  try {
    const GroupAnalysis analysis = analyze_group({action.r, action.s}, action.lattice, caps);
    cert.group_order_actual = analysis.group_size;
    cert.is_free = analysis.is_free;
    cert.has_no_translations = analysis.has_no_translations;
    cert.elements = analysis.reports;

    cert.step1 = check_rotation(action, caps);
    cert.step2 = check_reflection(action, caps);
    cert.step3 = check_relations(action, analysis, caps);
    cert.step4 = check_symmetries(action, analysis);
    cert.step5 = check_freeness(action);
  } catch (const CapExceeded& e) {
    cert.failure = e.what();
    cert.step1.passed = cert.step2.passed = cert.step3.passed = cert.step4.passed = cert.step5.passed = false;
  }
  cert.theorem_verified =
      cert.step1.passed && cert.step2.passed && cert.step3.passed && cert.step4.passed && cert.step5.passed;
  return cert;
}

CorollaryPlan build_corollary(int k) {
  if (k < 1) throw std::invalid_argument("corollary parameter k must be at least 1");
  const long l = std::lcm(4L, static_cast<long>(k));
  CorollaryPlan plan;
  plan.k = k;
  plan.params.n = static_cast<int>(l / 4);
  plan.rotation_power = static_cast<std::size_t>(l / k);
  plan.expected_dimension = static_cast<std::size_t>(l / 2 + 1);
  plan.expected_order = 2 * static_cast<std::size_t>(k);
  return plan;
}

std::vector<AffineAuto> corollary_generators(const CorollaryPlan& plan, const DihedralAction& action) {
  return {power(action.r, plan.rotation_power, action.lattice), action.s};
}

CorollaryCertificate verify_corollary(int k) {
  const CorollaryPlan plan = build_corollary(k);
  return verify_corollary(k, default_caps(plan.params.n));
}

CorollaryCertificate verify_corollary(int k, const AnalysisCaps& caps) {
  CorollaryCertificate cert;
  cert.plan = build_corollary(k);
  const DihedralAction action = build_action(cert.plan.params);
  cert.ambient_dimension = action.shape.complex_dim();
  cert.dimension_matches = cert.ambient_dimension == cert.plan.expected_dimension;
  try {
    const GroupAnalysis analysis = analyze_group(corollary_generators(cert.plan, action), action.lattice, caps);
    cert.subgroup_order = analysis.group_size;
    cert.order_matches = cert.subgroup_order == cert.plan.expected_order;
    cert.relations_hold = analysis.dihedral_shape && analysis.rotation_order == static_cast<std::size_t>(k);
    cert.is_free = analysis.is_free;
    cert.has_no_translations = analysis.has_no_translations;
    cert.elements = analysis.reports;
  } catch (const CapExceeded& e) {
    cert.failure = e.what();
  }
  cert.verified = cert.failure.empty() && cert.dimension_matches && cert.order_matches && cert.relations_hold &&
                  cert.is_free && cert.has_no_translations;
  return cert;
}

}  // namespace dihedral
