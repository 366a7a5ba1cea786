// Generators for (n, B) pairs used by the dual-number tests and the acceptance suite.
#pragma once

#include "oracles.hpp"

#include "manin/dualnum.hpp"

namespace oracle {

// Basis h_1..h_r, then E_alpha for alpha in N.
inline std::vector<LieElement> reductive_basis(const RootSubset& n) {
  const LieAlgebra& g = n.g();
  std::vector<LieElement> b;
  for (std::size_t i = 0; i < g.cartan_dim(); ++i) b.push_back(LieElement::basis(i));
  for (auto a : n.ordinals()) b.push_back(LieElement::basis(g.root_index(a)));
  return b;
}

inline LieElement conjugate_element(const LieAlgebra& g, const LieElement& x, const Matrix& m, const Matrix& minv) {
  return g.from_matrix(m * g.to_matrix(x) * minv);
}

// Pair number `i` of a deterministic mixed family: reductive subalgebras with coboundaries of
// arbitrary elements, their conjugates, Cartan and abelian nilradicals with arbitrary skew forms.
inline SubalgebraPair generated_pair(const Algebra& g, Gen& gen, int i) {
  auto subsets = enumerate_reductive(g, RootSubset::empty(g));
  const RootSubset& n = subsets[gen.integer(0, long(subsets.size()) - 1)];
  auto basis = reductive_basis(n);
  switch (i % 4) {
    case 0:
      return coboundary_pair(g, basis, gen.element(*g, 0.4));
    case 1: {
      Matrix m = gen.invertible(g->matrix_size());
      Matrix minv = *inverse(m);
      for (auto& x : basis) x = conjugate_element(*g, x, m, minv);
      return coboundary_pair(g, basis, gen.element(*g, 0.4));
    }
    case 2: {
      // Cartan subalgebra: abelian, so every skew form is a cocycle.
      std::vector<LieElement> h(basis.begin(), basis.begin() + long(g->cartan_dim()));
      Matrix b(h.size(), h.size());
      for (std::size_t p = 0; p < h.size(); ++p)
        for (std::size_t q = p + 1; q < h.size(); ++q) {
          b(p, q) = gen.rational();
          b(q, p) = -b(p, q);
        }
      return SubalgebraPair(g, h, b);
    }
    default: {
      // span(E_1j : j > 1) is abelian.
      std::vector<LieElement> a;
      for (std::size_t j = 1; j < g->matrix_size(); ++j) a.push_back(LieElement::basis(matrix_unit_index(*g, 0, j)));
      Matrix b(a.size(), a.size());
      for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q) {
          b(p, q) = gen.rational();
          b(q, p) = -b(p, q);
        }
      return SubalgebraPair(g, a, b);
    }
  }
}

}  // namespace oracle
