#include "dihedral/action_analysis.hpp"

#include <algorithm>
#include <numeric>

namespace dihedral {

namespace {

RatVector canonical_key(const AffineAuto& g) {
  RatVector key = g.linear.data();
  key.insert(key.end(), g.translation.coords.begin(), g.translation.coords.end());
  return key;
}

bool is_identity_mod(const AffineAuto& g, const EnlargedLattice& lattice) {
  return g.linear.is_identity() && lattice.contains(g.translation);
}

}  // namespace

std::string WordLabel::to_string() const {
  std::string out;
  if (rotation == 1) out = "r";
  else if (rotation > 1) out = "r^" + std::to_string(rotation);
  if (reflection == 1) out += out.empty() ? "s" : " s";
  else if (reflection > 1) out += (out.empty() ? "s^" : " s^") + std::to_string(reflection);
  return out;
}

FiniteGroup::FiniteGroup(EnlargedLattice lattice, std::vector<AffineAuto> elements)
    : lattice_(std::move(lattice)), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    elements_[i] = canonicalize(elements_[i], lattice_);
    index_.emplace(canonical_key(elements_[i]), i);
  }
}

std::optional<std::size_t> FiniteGroup::index_of(const AffineAuto& g) const {
  auto it = index_.find(canonical_key(canonicalize(g, lattice_)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t order(const AffineAuto& g, const EnlargedLattice& lattice, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("order: cap must be at least 1");
  AffineAuto acc = canonicalize(g, lattice);
  std::size_t k = 1;
  while (!is_identity_mod(acc, lattice)) {
    if (k >= cap) throw CapExceeded("order exceeds cap " + std::to_string(cap));
    acc = compose(acc, g, lattice);
    ++k;
  }
  return k;
}

bool is_translation(const AffineAuto& g, const EnlargedLattice& lattice) {
  return g.linear.is_identity() && !lattice.contains(g.translation);
}

// g(z) = z on R^m/L  ⇔  (M − I)z = −t + λ for some real z and λ ∈ L
//                    ⇔  −t + λ ∈ col(M − I) for some λ ∈ L
//                    ⇔  N·λ = N·t for some λ ∈ L, N a left-nullspace basis.
// M − I is rational, so its real column space is cut out by rational
// equations N·y = 0 and real solvability coincides with rational
// solvability.  The last condition is membership of N·t in the subgroup of
// Q^k generated by the images N·g of the lattice generators.
bool exists_fixed_point(const AffineAuto& g, const EnlargedLattice& lattice) {
  RatMatrix shifted = g.linear;
  for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= 1;
  const RatMatrix n = left_nullspace(shifted);
  if (n.rows() == 0) return true;

  const RatVector target = multiply(n, g.translation.coords);
  std::vector<RatVector> images;
  for (const auto& gen : lattice.generators()) images.push_back(multiply(n, gen));
  return subgroup_membership(target, images);
}

FiniteGroup closure(const std::vector<AffineAuto>& gens, const EnlargedLattice& lattice, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("closure: cap must be at least 1");
  const std::size_t m = lattice.dimension();

  std::vector<AffineAuto> canonical_gens;
  for (const auto& g : gens) canonical_gens.push_back(canonicalize(g, lattice));

  std::vector<AffineAuto> elements{AffineAuto::identity(m)};
  std::map<RatVector, std::size_t> seen{{canonical_key(elements.front()), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : canonical_gens) {
      AffineAuto next = compose(elements[i], g, lattice);
      RatVector key = canonical_key(next);
      if (seen.count(key)) continue;
      if (elements.size() >= cap) throw CapExceeded("closure exceeds cap " + std::to_string(cap));
      seen.emplace(std::move(key), elements.size());
      elements.push_back(std::move(next));
    }
  }
  return FiniteGroup(lattice, std::move(elements));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group) {
  const auto& lattice = group.lattice();
  std::vector<AffineAuto> inverses;
  inverses.reserve(group.size());
  for (const auto& h : group.elements()) inverses.push_back(inverse(h, lattice));

  std::vector<bool> assigned(group.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t h = 0; h < group.size(); ++h) {
      const AffineAuto conj = compose(compose(group[h], group[i], lattice), inverses[h], lattice);
      const auto j = group.index_of(conj);
      if (!j) throw std::logic_error("conjugacy_classes: group is not closed under conjugation");
      if (!assigned[*j]) {
        assigned[*j] = true;
        orbit.push_back(*j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

GroupAnalysis analyze_group(const std::vector<AffineAuto>& gens, const EnlargedLattice& lattice,
                            const AnalysisCaps& caps) {
  FiniteGroup group = closure(gens, lattice, caps.closure);
  const std::size_t size = group.size();

  std::vector<std::optional<WordLabel>> labels(size);
  bool dihedral = false;
  std::size_t rotation_order = 0;
  if (gens.size() == 2 && size % 2 == 0) {
    const std::size_t k = size / 2;
    const AffineAuto& r = gens[0];
    const AffineAuto& s = gens[1];
    rotation_order = order(r, lattice, caps.order);
    const bool relations = rotation_order == k && is_identity_mod(compose(s, s, lattice), lattice) &&
                           is_identity_mod(power(compose(r, s, lattice), 2, lattice), lattice);
    if (relations) {
      dihedral = true;
      AffineAuto rotation = AffineAuto::identity(lattice.dimension());
      for (std::size_t a = 0; a < k && dihedral; ++a) {
        const AffineAuto candidates[2] = {rotation, compose(rotation, s, lattice)};
        for (std::size_t b = 0; b < 2; ++b) {
          const auto idx = group.index_of(candidates[b]);
          if (!idx || labels[*idx]) {
            dihedral = false;
            break;
          }
          labels[*idx] = WordLabel{a, b};
        }
        rotation = compose(rotation, r, lattice);
      }
    }
    if (!dihedral) std::fill(labels.begin(), labels.end(), std::nullopt);
  }

  std::vector<ElementReport> reports(size);
  for (std::size_t i = 0; i < size; ++i) {
    const AffineAuto& g = group[i];
    reports[i].word = labels[i];
    reports[i].order = order(g, lattice, caps.order);
    reports[i].is_translation = is_translation(g, lattice);
    reports[i].has_fixed_point = exists_fixed_point(g, lattice);
  }

  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  if (dihedral)
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return *labels[a] < *labels[b]; });

  GroupAnalysis out{std::move(group), {}, perm, size};
  for (auto i : perm) out.reports.push_back(reports[i]);
  out.is_free = true;
  out.has_no_translations = true;
  for (std::size_t i = 0; i < size; ++i) {
    if (out.group[i].linear.is_identity() && !is_translation(out.group[i], lattice)) continue;
    if (reports[i].has_fixed_point) out.is_free = false;
    if (reports[i].is_translation) out.has_no_translations = false;
  }
  out.dihedral_shape = dihedral;
  out.rotation_order = rotation_order;
  if (dihedral) {
    for (const auto& cls : conjugacy_classes(out.group))
      if (labels[cls.front()]->reflection == 1) ++out.reflection_class_count;
  }
  return out;
}

}  // namespace dihedral
