// Test-only generators and independent reference computations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "manin/lie_algebra.hpp"
#include "manin/linalg.hpp"
#include "manin/reductive.hpp"
#include "manin/tensor.hpp"

namespace oracle {

using namespace manin;

// 1-based matrix unit E_ij and Cartan generator H_k.
inline LieElement E(const LieAlgebra& g, std::size_t i, std::size_t j, const Rational& c = 1) {
  return LieElement::basis(matrix_unit_index(g, i - 1, j - 1), c);
}
inline LieElement H(std::size_t k, const Rational& c = 1) { return LieElement::basis(k - 1, c); }

inline std::size_t ordinal(const LieAlgebra& g, std::size_t i, std::size_t j) {
  return *g.root_at_index(matrix_unit_index(g, i - 1, j - 1));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational() {
    Rational q(integer(-6, 6), integer(1, 4));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational() {
    Rational q;
    while (sgn(q) == 0) q = rational();
    return q;
  }

  LieElement element(const LieAlgebra& g, double density = 0.5) {
    LieElement x;
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (coin(density)) x.add(i, rational());
    return x;
  }

  Tensor2 tensor2(const Algebra& g, std::size_t terms) {
    Tensor2 t(g);
    for (std::size_t n = 0; n < terms; ++n) t.add({index(*g), index(*g)}, rational());
    return t;
  }
  Tensor3 tensor3(const Algebra& g, std::size_t terms) {
    Tensor3 t(g);
    for (std::size_t n = 0; n < terms; ++n) t.add({index(*g), index(*g), index(*g)}, rational());
    return t;
  }
  Tensor2 skew(const Algebra& g, std::size_t terms) {
    Tensor2 t = tensor2(g, terms);
    return t - flip(t);
  }

  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(-2, 2);
      if (inverse(m)) return m;
    }
  }

  std::size_t index(const LieAlgebra& g) { return static_cast<std::size_t>(integer(0, long(g.dim()) - 1)); }

 private:
  std::mt19937_64 rng_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

// out += c * m, touching only nonzero entries of m.
inline void add_scaled(Matrix& out, const Rational& c, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out(i, j) += c * m(i, j);
}

// Image of a 3-tensor under rho(x)rho(x)rho in End(V^(x)3). Injective on g^(x)3.
inline Matrix rep3(const Tensor3& t, const LieAlgebra& g) {
  const std::size_t n = g.matrix_size();
  Matrix out(n * n * n, n * n * n);
  for (const auto& [k, c] : t.terms())
    add_scaled(out, c, kron(kron(g.basis_matrix(k[0]), g.basis_matrix(k[1])), g.basis_matrix(k[2])));
  return out;
}

// r^{12}, r^{13}, r^{23} as matrices on V^(x)3.
inline Matrix leg_embed(const Tensor2& t, const LieAlgebra& g, int which) {
  const std::size_t n = g.matrix_size();
  const Matrix id = Matrix::identity(n);
  Matrix out(n * n * n, n * n * n);
  for (const auto& [k, c] : t.terms()) {
    const Matrix& a = g.basis_matrix(k[0]);
    const Matrix& b = g.basis_matrix(k[1]);
    Matrix m = which == 12 ? kron(kron(a, b), id) : which == 13 ? kron(kron(a, id), b) : kron(kron(id, a), b);
    add_scaled(out, c, m);
  }
  return out;
}

// [a^12, b^13] + [a^12, b^23] + [a^13, b^23] computed with associative matrix products.
inline Matrix mixed_bracket_rep(const Tensor2& a, const Tensor2& b, const LieAlgebra& g) {
  Matrix a12 = leg_embed(a, g, 12), a13 = leg_embed(a, g, 13);
  Matrix b13 = leg_embed(b, g, 13), b23 = leg_embed(b, g, 23);
  return commutator(a12, b13) + commutator(a12, b23) + commutator(a13, b23);
}

// alpha(h) through the diagonal of h: (e_i - e_j)(diag d) = d_i - d_j.
inline Rational root_on_diagonal(const LieAlgebra& g, std::size_t ordinal, const CartanElement& h) {
  Matrix m = g.to_matrix(h.value());
  const auto& c = g.root(ordinal).coords;
  Rational s;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * m(i, i);
  return s;
}

// Closure tested through root coordinate vectors, without the algebra's root table.
inline bool closed_by_coords(const LieAlgebra& g, const std::vector<std::size_t>& members) {
  std::set<std::vector<int>> all, in;
  for (const auto& r : g.roots()) all.insert(r.coords);
  for (auto k : members) in.insert(g.root(k).coords);
  for (const auto& a : in) {
    std::vector<int> neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    if (!in.count(neg)) return false;
    for (const auto& b : in) {
      std::vector<int> s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      if (all.count(s) && !in.count(s)) return false;
    }
  }
  return true;
}

// Every reductive subset containing `must`, by brute force over all symmetric subsets.
inline std::vector<std::vector<std::size_t>> brute_reductive(const LieAlgebra& g, const std::vector<std::size_t>& must) {
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < g.num_roots(); ++k)
    if (g.is_positive(k)) pos.push_back(k);
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pos.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; b < pos.size(); ++b)
      if (mask >> b & 1) {
        s.push_back(pos[b]);
        s.push_back(g.negative(pos[b]));
      }
    std::sort(s.begin(), s.end());
    if (!std::includes(s.begin(), s.end(), must.begin(), must.end())) continue;
    if (closed_by_coords(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

namespace oracle {

// Casimir element sum G^{-1}_{ij} e_i (x) e_j.
inline manin::Tensor2 casimir(const manin::Algebra& g) {
  manin::Matrix ginv = *manin::inverse(g->gram());
  manin::Tensor2 omega(g);
  for (std::size_t i = 0; i < g->dim(); ++i)
    for (std::size_t j = 0; j < g->dim(); ++j) omega.add({i, j}, ginv(i, j));
  return omega;
}

// Standard quasitriangular solution: sum over positive roots of E_a (x) E_{-a}, plus half the Cartan part of the Casimir.
inline manin::Tensor2 standard_r(const manin::Algebra& g) {
  manin::Tensor2 omega = casimir(g);
  manin::Tensor2 r(g);
  for (const auto& [k, c] : omega.terms()) {
    if (g->is_cartan_index(k[0]))
      r.add(k, c / 2);
    else if (g->is_positive(*g->root_at_index(k[0])))
      r.add(k, c);
  }
  return r;
}

}  // namespace oracle
