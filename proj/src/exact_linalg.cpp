#include "dihedral/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dihedral {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

template <typename T>
void axpy_row(Matrix<T>& m, std::size_t dst, const T& factor, std::size_t src, std::size_t from = 0) {
  for (std::size_t j = from; j < m.cols(); ++j) {
    if (sgn(m(src, j)) != 0) m(dst, j) += factor * m(src, j);
  }
}

template <typename T>
void negate_row(Matrix<T>& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// Replaces rows (r, i) by (x·row_r + y·row_i, −q·row_r + p·row_i).  The 2×2
// transform has determinant x·p + y·q = 1 whenever x·a + y·b = g, p = a/g,
// q = b/g.
void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const Integer& x, const Integer& y,
                  const Integer& p, const Integer& q, std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) {
    Integer top = x * m(r, j) + y * m(i, j);
    Integer bottom = p * m(i, j) - q * m(r, j);
    m(r, j) = std::move(top);
    m(i, j) = std::move(bottom);
  }
}

struct EchelonForm {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over Q.
EchelonForm rref(RatMatrix a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = -a(i, c);
      axpy_row(a, i, f, r, c);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

Integer lcm_of_denominators(std::span<const Rational> v, Integer acc = 1) {
  for (const auto& x : v) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.get_den_mpz_t());
  return acc;
}

}  // namespace

HermiteDecomposition hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;

  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      if (sgn(h(r, c)) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
      const Integer p = h(r, c) / g;
      const Integer q = h(i, c) / g;
      combine_rows(h, r, i, x, y, p, q, c);
      combine_rows(u, r, i, x, y, p, q, 0);
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (sgn(f) == 0) continue;
      f = -f;
      axpy_row(h, i, f, r, c);
      axpy_row(u, i, f, r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(h), std::move(u), r, std::move(pivots)};
}

bool in_row_lattice(const HermiteDecomposition& form, std::span<const Integer> v) {
  const IntMatrix& h = form.h;
  if (v.size() != h.cols()) throw std::invalid_argument("in_row_lattice: length mismatch");
  IntVector residual(v.begin(), v.end());
  std::size_t k = 0;
  for (std::size_t j = 0; j < residual.size(); ++j) {
    if (k < form.rank && form.pivot_cols[k] == j) {
      if (!mpz_divisible_p(residual[j].get_mpz_t(), h(k, j).get_mpz_t())) return false;
      const Integer q = residual[j] / h(k, j);
      if (sgn(q) != 0)
        for (std::size_t t = j; t < residual.size(); ++t) residual[t] -= q * h(k, t);
      ++k;
    } else if (sgn(residual[j]) != 0) {
      return false;
    }
  }
  return true;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVector multiply(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("multiply: shape mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivot_cols.size(); }

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix m = a;
  Rational det = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = -m(i, c) / m(c, c);
      axpy_row(m, i, f, c, c);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& a) { return determinant(to_rational(a)).get_num(); }

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  EchelonForm e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

RatMatrix left_nullspace(const RatMatrix& c) {
  const EchelonForm e = rref(transpose(c));
  const std::size_t vars = c.rows();
  std::vector<bool> is_pivot(vars, false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < vars; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(vars);
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = -e.reduced(k, f);

    // Scale to a primitive integer vector.
    const Integer d = lcm_of_denominators(x);
    Integer g = 0;
    for (auto& xi : x) {
      xi *= d;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), xi.get_num_mpz_t());
    }
    for (auto& xi : x) xi /= g;
    basis.push_back(std::move(x));
  }
  return RatMatrix::from_rows(basis, vars);
}

Integer common_denominator(std::span<const Rational> v) { return lcm_of_denominators(v); }

bool subgroup_membership(std::span<const Rational> v, std::span<const RatVector> gens) {
  const std::size_t k = v.size();
  for (const auto& g : gens)
    if (g.size() != k) throw std::invalid_argument("subgroup_membership: length mismatch");
  if (gens.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });

  Integer scale = lcm_of_denominators(v);
  for (const auto& g : gens) scale = lcm_of_denominators(g, scale);

  IntMatrix lattice(gens.size(), k);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rational x = gens[i][j] * scale;
      lattice(i, j) = x.get_num();
    }
  IntVector target(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Rational x = v[j] * scale;
    target[j] = x.get_num();
  }
  return in_row_lattice(hnf(lattice), target);
}

}  // namespace dihedral
