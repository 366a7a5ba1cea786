#include "manin/tensor.hpp"

#include <vector>

namespace manin {

Tensor2 tensor_product(const Algebra& g, const LieElement& a, const LieElement& b) {
  g->check(a);
  g->check(b);
  Tensor2 t(g);
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) t.add({i, j}, x * y);
  return t;
}

Tensor2 wedge(const Algebra& g, const LieElement& a, const LieElement& b) {
  return tensor_product(g, a, b) - tensor_product(g, b, a);
}

Tensor3 tensor_product(const Algebra& g, const LieElement& a, const LieElement& b, const LieElement& c) {
  g->check(a);
  g->check(b);
  g->check(c);
  Tensor3 t(g);
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms())
      for (const auto& [k, z] : c.terms()) t.add({i, j, k}, x * y * z);
  return t;
}

LieElement contract_first(const Tensor2& t, const LieElement& c) {
  const LieAlgebra& g = t.g();
  g.check(c);
  LieElement out;
  for (const auto& [k, x] : t.terms()) {
    Rational w;
    for (const auto& [i, ci] : c.terms()) w += ci * g.gram()(i, k[0]);
    if (sgn(w) != 0) out.add(k[1], w * x);
  }
  return out;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 out(t.algebra());
  for (const auto& [k, c] : t.terms()) out.add({k[1], k[0]}, c);
  return out;
}

Tensor3 mixed_bracket(const Tensor2& a, const Tensor2& b) {
  a.require_same(b);
  Tensor3 out(a.algebra() ? a.algebra() : b.algebra());
  if (a.is_zero() || b.is_zero()) return out;
  const LieAlgebra& g = a.g();
  for (const auto& [ka, x] : a.terms()) {
    const auto [i, j] = ka;
    for (const auto& [kb, y] : b.terms()) {
      const auto [k, l] = kb;
      const Rational xy = x * y;
      // [a^12, b^13] = sum [e_i, e_k] (x) e_j (x) e_l
      for (const auto& t : g.bracket_terms(i, k)) out.add({t.index, j, l}, xy * t.coeff);
      // [a^12, b^23] = sum e_i (x) [e_j, e_k] (x) e_l
      for (const auto& t : g.bracket_terms(j, k)) out.add({i, t.index, l}, xy * t.coeff);
      // [a^13, b^23] = sum e_i (x) e_k (x) [e_j, e_l]
      for (const auto& t : g.bracket_terms(j, l)) out.add({i, k, t.index}, xy * t.coeff);
    }
  }
  return out;
}

Tensor3 cyb(const Tensor2& r) { return mixed_bracket(r, r); }

Tensor3 permute_legs(const Tensor3& t, const std::array<int, 3>& sigma) {
  std::array<bool, 3> seen{};
  for (int s : sigma) {
    if (s < 0 || s > 2 || seen[static_cast<std::size_t>(s)]) throw DomainError("not a permutation of three legs");
    seen[static_cast<std::size_t>(s)] = true;
  }
  Tensor3 out(t.algebra());
  for (const auto& [k, c] : t.terms()) {
    Tensor3::Key moved{};
    for (std::size_t leg = 0; leg < 3; ++leg) moved[static_cast<std::size_t>(sigma[leg])] = k[leg];
    out.add(moved, c);
  }
  return out;
}

Tensor3 alt3(const Tensor3& t) { return t + permute_legs(t, {1, 2, 0}) + permute_legs(t, {2, 0, 1}); }

Tensor2 ad_action2(const LieElement& a, const Tensor2& t) {
  Tensor2 out(t.algebra());
  if (t.is_zero()) return out;
  const LieAlgebra& g = t.g();
  g.check(a);
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [ai, av] : a.terms()) {
      const Rational s = c * av;
      for (const auto& term : g.bracket_terms(ai, k[0])) out.add({term.index, k[1]}, s * term.coeff);
      for (const auto& term : g.bracket_terms(ai, k[1])) out.add({k[0], term.index}, s * term.coeff);
    }
  }
  return out;
}

bool is_invariant(const Tensor2& t, const Subspace& s) {
  if (t.is_zero()) return true;
  const LieAlgebra& g = t.g();
  if (s.ambient() != g.dim()) throw StructuralError("subspace ambient does not match tensor algebra");
  for (const auto& b : s.basis())
    if (!ad_action2(g.from_dense(b), t).is_zero()) return false;
  return true;
}

bool is_skew(const Tensor2& t) { return (t + flip(t)).is_zero(); }

bool is_symmetric(const Tensor2& t) { return (t - flip(t)).is_zero(); }

namespace {

std::vector<LieElement> sparse_columns(const LieAlgebra& g, const Projection& p) {
  if (p.ambient() != g.dim()) throw StructuralError("projection ambient does not match tensor algebra");
  std::vector<LieElement> cols;
  cols.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) cols.push_back(g.from_dense(p.column(i)));
  return cols;
}

}  // namespace

Tensor2 project_legs(const Tensor2& t, const Projection& p) {
  Tensor2 out(t.algebra());
  if (t.is_zero()) return out;
  const auto cols = sparse_columns(t.g(), p);
  for (const auto& [k, c] : t.terms())
    for (const auto& [i, x] : cols[k[0]].terms())
      for (const auto& [j, y] : cols[k[1]].terms()) out.add({i, j}, c * x * y);
  return out;
}

Tensor2 project_legs(const Tensor2& t, const Projection& first, const Projection& second) {
  Tensor2 out(t.algebra());
  if (t.is_zero()) return out;
  const auto a = sparse_columns(t.g(), first);
  const auto b = sparse_columns(t.g(), second);
  for (const auto& [k, c] : t.terms())
    for (const auto& [i, x] : a[k[0]].terms())
      for (const auto& [j, y] : b[k[1]].terms()) out.add({i, j}, c * x * y);
  return out;
}

Tensor3 project_legs(const Tensor3& t, const Projection& p) {
  Tensor3 out(t.algebra());
  if (t.is_zero()) return out;
  const auto cols = sparse_columns(t.g(), p);
  for (const auto& [k, c] : t.terms())
    for (const auto& [i, x] : cols[k[0]].terms())
      for (const auto& [j, y] : cols[k[1]].terms())
        for (const auto& [l, z] : cols[k[2]].terms()) out.add({i, j, l}, c * x * y * z);
  return out;
}

Tensor2 project_legs(const Tensor2& t, const Subspace& complement, const Subspace& along) {
  return project_legs(t, Projection(complement, along));
}

Tensor3 project_legs(const Tensor3& t, const Subspace& complement, const Subspace& along) {
  return project_legs(t, Projection(complement, along));
}

Tensor2 conjugate(const Tensor2& t, const Matrix& m, Conjugation direction) {
  Tensor2 out(t.algebra());
  if (t.is_zero()) return out;
  const LieAlgebra& g = t.g();
  if (m.rows() != g.matrix_size() || m.cols() != g.matrix_size())
    throw StructuralError("conjugating matrix has the wrong size for " + g.id());
  const auto inv = inverse(m);
  if (!inv) throw DomainError("conjugating matrix is singular");
  const Matrix& left = direction == Conjugation::forward ? m : *inv;
  const Matrix& right = direction == Conjugation::forward ? *inv : m;
  std::map<std::size_t, LieElement> image;
  auto leg = [&](std::size_t i) -> const LieElement& {
    auto it = image.find(i);
    if (it == image.end()) it = image.emplace(i, g.from_matrix(left * g.basis_matrix(i) * right)).first;
    return it->second;
  };
  for (const auto& [k, c] : t.terms()) {
    const LieElement& a = leg(k[0]);
    const LieElement& b = leg(k[1]);
    for (const auto& [i, x] : a.terms())
      for (const auto& [j, y] : b.terms()) out.add({i, j}, c * x * y);
  }
  return out;
}

}  // namespace manin
