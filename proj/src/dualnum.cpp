#include "manin/dualnum.hpp"

#include "manin/error.hpp"

namespace manin {

Rational dual_form(const LieAlgebra& g, const DualElement& x, const DualElement& y) {
  return g.form(x.a, y.b) + g.form(x.b, y.a);
}

DualElement dual_bracket(const LieAlgebra& g, const DualElement& x, const DualElement& y) {
  return {g.bracket(x.a, y.a), g.bracket(x.a, y.b) + g.bracket(x.b, y.a)};
}

Vector to_dense(const LieAlgebra& g, const DualElement& x) {
  Vector v = g.to_dense(x.a);
  Vector e = g.to_dense(x.b);
  v.insert(v.end(), e.begin(), e.end());
  return v;
}

DualElement dual_from_dense(const LieAlgebra& g, std::span<const Rational> v) {
  if (v.size() != 2 * g.dim()) throw StructuralError("dual vector has the wrong length");
  return {g.from_dense(v.subspan(0, g.dim())), g.from_dense(v.subspan(g.dim()))};
}

DualSubspace::DualSubspace(Algebra g, Subspace s) : g_(std::move(g)), s_(std::move(s)) {
  if (!g_) throw StructuralError("dual subspace without an algebra");
  if (s_.ambient() != 2 * g_->dim()) throw StructuralError("dual subspace has the wrong ambient dimension");
}

DualSubspace DualSubspace::span(const Algebra& g, const std::vector<DualElement>& elements) {
  std::vector<Vector> rows;
  rows.reserve(elements.size());
  for (const auto& x : elements) rows.push_back(to_dense(*g, x));
  return DualSubspace(g, Subspace::span(2 * g->dim(), rows));
}

std::vector<DualElement> DualSubspace::basis() const {
  std::vector<DualElement> out;
  for (std::size_t r = 0; r < s_.dim(); ++r) out.push_back(dual_from_dense(*g_, s_.rref().row(r)));
  return out;
}

bool DualSubspace::contains(const DualElement& x) const { return s_.contains(to_dense(*g_, x)); }

Subspace DualSubspace::g_projection() const {
  const std::size_t d = g_->dim();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < s_.dim(); ++r) {
    auto row = s_.rref().row(r);
    rows.emplace_back(row.begin(), row.begin() + d);
  }
  return Subspace::span(d, rows);
}

namespace {

// Intersection of l with the g half (first = true) or the eps half, in g-coordinates.
Subspace half(const Subspace& l, std::size_t d, bool first) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(2 * d);
    e[first ? i : d + i] = 1;
    units.push_back(std::move(e));
  }
  Subspace cut = intersect(l, Subspace::span(2 * d, units));
  std::vector<Vector> rows;
  for (const auto& v : cut.basis()) rows.emplace_back(v.begin() + (first ? 0 : d), v.begin() + (first ? d : 2 * d));
  return Subspace::span(d, rows);
}

}  // namespace

Subspace DualSubspace::g_part() const { return half(s_, g_->dim(), true); }
Subspace DualSubspace::eps_part() const { return half(s_, g_->dim(), false); }

LagrangianVerdict is_lagrangian_subalgebra(const DualSubspace& l) {
  const LieAlgebra& g = l.g();
  LagrangianVerdict v;
  auto basis = l.basis();
  v.dimension_ok = l.dim() == g.dim();
  v.isotropic = true;
  v.subalgebra = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (v.isotropic && sgn(dual_form(g, basis[i], basis[j])) != 0) v.isotropic = false;
      if (v.subalgebra && j > i && !l.contains(dual_bracket(g, basis[i], basis[j]))) v.subalgebra = false;
    }
  return v;
}

SubalgebraPair::SubalgebraPair(Algebra g, std::vector<LieElement> basis, Matrix b)
    : g_(std::move(g)), basis_(std::move(basis)), b_(std::move(b)) {
  if (!g_) throw StructuralError("pair without an algebra");
  const std::size_t k = basis_.size();
  if (b_.rows() != k || b_.cols() != k) throw StructuralError("B must be a square matrix matching the basis of n");
  for (const auto& x : basis_) g_->check(x);
  n_ = span(*g_, basis_);
  if (n_.dim() != k) throw PreconditionError("basis of n is linearly dependent");
  if (!is_subalgebra(*g_, n_)) throw PreconditionError("n is not a subalgebra");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (b_(i, j) != -b_(j, i)) throw PreconditionError("B is not skew");

  // Coordinates of [x_i, x_j] in the basis, then the cocycle identity on i < j < l.
  std::vector<std::vector<Vector>> br(k, std::vector<Vector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) br[i][j] = coords(g_->bracket(basis_[i], basis_[j]));
  auto b_on = [&](const Vector& c, std::size_t l) {
    Rational s;
    for (std::size_t m = 0; m < k; ++m)
      if (sgn(c[m]) != 0) s += c[m] * b_(m, l);
    return s;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        // B([x,y],z) + B([y,z],x) + B([z,x],y) with [z,x] = -[x,z].
        Rational s = b_on(br[i][j], l) + b_on(br[j][l], i) - b_on(br[i][l], j);
        if (sgn(s) != 0) throw PreconditionError("B is not a 2-cocycle");
      }
}

Vector SubalgebraPair::coords(const LieElement& x) const {
  const std::size_t d = g_->dim(), k = basis_.size();
  Matrix cols(d, k);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& [i, c] : basis_[j].terms()) cols(i, j) = c;
  auto sol = solve(cols, g_->to_dense(x));
  if (!sol) throw DomainError("element is not in n");
  return *sol;
}

Rational SubalgebraPair::eval(const LieElement& x, const LieElement& y) const {
  Vector cx = coords(x), cy = coords(y);
  Rational s;
  for (std::size_t i = 0; i < cx.size(); ++i)
    for (std::size_t j = 0; j < cy.size(); ++j) s += cx[i] * b_(i, j) * cy[j];
  return s;
}

Subspace SubalgebraPair::kernel() const {
  std::vector<LieElement> out;
  for (const auto& c : nullspace(b_)) {
    LieElement x;
    for (std::size_t i = 0; i < c.size(); ++i) x += c[i] * basis_[i];
    out.push_back(x);
  }
  return span(*g_, out);
}

SubalgebraPair SubalgebraPair::canonical() const {
  std::vector<LieElement> cb;
  for (const auto& v : n_.basis()) cb.push_back(g_->from_dense(v));
  const std::size_t k = cb.size();
  Matrix t(k, k);
  for (std::size_t m = 0; m < k; ++m) {
    Vector c = coords(cb[m]);
    for (std::size_t l = 0; l < k; ++l) t(m, l) = c[l];
  }
  return SubalgebraPair(g_, std::move(cb), t * b_ * transpose(t));
}

bool operator==(const SubalgebraPair& p, const SubalgebraPair& q) {
  if (!same_ambient(p.g(), q.g()) || p.n_ != q.n_) return false;
  return p.canonical().b_ == q.canonical().b_;
}

SubalgebraPair coboundary_pair(const Algebra& g, std::vector<LieElement> basis, const LieElement& h) {
  const std::size_t k = basis.size();
  Matrix b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = g->form(h, g->bracket(basis[i], basis[j]));
  return SubalgebraPair(g, std::move(basis), std::move(b));
}

DualSubspace pair_to_lagrangian(const SubalgebraPair& p) {
  const LieAlgebra& g = p.g();
  const auto& basis = p.basis();
  const std::size_t k = basis.size(), d = g.dim();
  // Row j: the functional b -> <b, y_j>.
  Matrix m(k, d);
  for (std::size_t j = 0; j < k; ++j) {
    Vector gy = g.gram() * g.to_dense(basis[j]);
    for (std::size_t c = 0; c < d; ++c) m(j, c) = gy[c];
  }
  std::vector<DualElement> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Vector rhs(k);
    for (std::size_t j = 0; j < k; ++j) rhs[j] = p.b()(i, j);
    auto b = solve(m, rhs);
    if (!b) throw InvariantFailure("pair_to_lagrangian: unsolvable graph equation");
    gens.push_back({basis[i], g.from_dense(*b)});
  }
  for (const auto& z : perp(g, p.n()).basis()) gens.push_back({LieElement(), g.from_dense(z)});
  return DualSubspace::span(p.algebra(), gens);
}

SubalgebraPair lagrangian_to_pair(const DualSubspace& l) {
  if (!is_lagrangian_subalgebra(l).all()) throw PreconditionError("lagrangian_to_pair: not a Lagrangian subalgebra");
  const LieAlgebra& g = l.g();
  const std::size_t d = g.dim();
  Subspace n = l.g_projection();
  if (l.eps_part() != perp(g, n)) throw InvariantFailure("l /\\ g eps differs from n^perp eps");

  const Matrix& rows = l.subspace().rref();
  Matrix a(d, rows.rows());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t c = 0; c < d; ++c) a(c, r) = rows(r, c);
  std::vector<LieElement> basis, partner;
  for (const auto& v : n.basis()) {
    auto coeff = solve(a, v);
    if (!coeff) throw InvariantFailure("lagrangian_to_pair: projection element has no lift");
    Vector b(d);
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (std::size_t c = 0; c < d; ++c) b[c] += (*coeff)[r] * rows(r, d + c);
    basis.push_back(g.from_dense(v));
    partner.push_back(g.from_dense(b));
  }
  const std::size_t k = basis.size();
  Matrix bm(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) bm(i, j) = g.form(partner[i], basis[j]);
  return SubalgebraPair(l.algebra(), std::move(basis), std::move(bm));
}

PairClassifyResult classify_pair(const SubalgebraPair& p, const RootSubset& u) {
  if (!is_reductive(u)) throw PreconditionError("U is not reductive: " + subset_label(u));
  const LieAlgebra& g = p.g();
  const Subspace& n = p.n();
  const std::size_t r = g.cartan_dim();
  for (std::size_t i = 0; i < r; ++i)
    if (!n.contains(g.to_dense(LieElement::basis(i)))) throw PreconditionError("n does not contain the Cartan subalgebra");

  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < g.num_roots(); ++a)
    if (n.contains(g.to_dense(LieElement::basis(g.root_index(a))))) members.push_back(a);
  RootSubset nn(u.algebra(), members);
  if (r + nn.size() != n.dim()) throw InvariantFailure("h-stable subalgebra is not a sum of root spaces");
  auto reject = [](std::string c, std::vector<std::size_t> w, std::string m) {
    return PairClassifyResult(Rejection{std::move(c), std::move(w), std::move(m)});
  };

  for (auto a : nn.ordinals())
    for (auto b : nn.ordinals())
      if (b != nn.g().negative(a) &&
          sgn(p.eval(LieElement::basis(g.root_index(a)), LieElement::basis(g.root_index(b)))) != 0)
        return reject("root-pair", {a, b},
                      "B(E_a, E_b) != 0 for a = " + root_label(g, a) + ", b = " + root_label(g, b) + " with a + b != 0");
  if (!is_reductive(nn)) return reject("reductive", {}, "N = " + subset_label(nn) + " is not reductive");
  if (!nn.includes(u)) return reject("reductive", {}, "N does not contain U");

  // B(x_i, x_j) = <h, [x_i, x_j]> for h in the Cartan subalgebra, h orthogonal to z(n).
  const auto& basis = p.basis();
  const std::size_t k = basis.size();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      LieElement c = g.bracket(basis[i], basis[j]);
      Vector row(r);
      for (std::size_t m = 0; m < r; ++m) row[m] = g.form(LieElement::basis(m), c);
      rows.push_back(std::move(row));
      rhs.push_back(p.b()(i, j));
    }
  Matrix roots_on_h(nn.size(), r);
  for (std::size_t row = 0; row < nn.size(); ++row)
    for (std::size_t m = 0; m < r; ++m) roots_on_h(row, m) = g.root_functional(nn.ordinals()[row])[m];
  for (const auto& z : nullspace(roots_on_h)) {
    LieElement zc;
    for (std::size_t m = 0; m < r; ++m) zc.add(m, z[m]);
    Vector row(r);
    for (std::size_t m = 0; m < r; ++m) row[m] = g.form(LieElement::basis(m), zc);
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  auto sol = rows.empty() ? std::optional<Vector>(Vector(r)) : solve(Matrix::from_rows(rows, r), rhs);
  if (!sol) return reject("coboundary", {}, "B is not the coboundary of a Cartan element");
  CartanElement h = CartanElement::from_coords(g, *sol);

  if (p.kernel() != subalgebra_from_subset(u)) return reject("kernel", {}, "Ker B differs from u");
  if (!is_regular(h, nn, u)) return reject("regular", {}, "recovered h is not (N, U)-regular");
  return PairClassification{nn, h};
}

DualSubspace build_lnb(const RootSubset& n, const CartanElement& h, const RootSubset& u, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  require_regular(h, n, u);
  const LieAlgebra& g = n.g();
  std::vector<DualElement> gens;
  for (const auto& v : subalgebra_from_subset(u).basis()) gens.push_back({g.from_dense(v), {}});
  for (std::size_t a = 0; a < g.num_roots(); ++a) {
    if (u.contains(a)) continue;
    auto e = LieElement::basis(g.root_index(a));
    if (!n.contains(a))
      gens.push_back({{}, e});
    else
      gens.push_back({e, Rational(sign) * root_value(g, a, h) * e});
  }
  return DualSubspace::span(n.algebra(), gens);
}

DualSubspace lagrangian_from_bivector(const RootSubset& u, const Tensor2& b) {
  if (!is_reductive(u)) throw PreconditionError("U is not reductive: " + subset_label(u));
  const LieAlgebra& g = u.g();
  if (b.algebra() && !same_ambient(b.g(), g)) throw StructuralError("bivector over a different algebra");
  if (!is_skew(b)) throw DomainError("bivector is not skew");
  for (const auto& [k, c] : b.terms())
    for (auto i : k) {
      auto a = g.root_at_index(i);
      if (!a || u.contains(*a)) throw DomainError("bivector is not supported on m (x) m");
    }
  std::vector<DualElement> gens;
  for (const auto& v : subalgebra_from_subset(u).basis()) gens.push_back({g.from_dense(v), {}});
  Tensor2 bb = b.algebra() ? b : Tensor2(u.algebra());
  for (std::size_t a = 0; a < g.num_roots(); ++a) {
    if (u.contains(a)) continue;
    auto e = LieElement::basis(g.root_index(a));
    gens.push_back({contract_first(bb, e), e});
  }
  return DualSubspace::span(u.algebra(), gens);
}

bool is_poisson_homogeneous(const RootSubset& u, const Tensor2& b) {
  return is_lagrangian_subalgebra(lagrangian_from_bivector(u, b)).subalgebra;
}

}  // namespace manin
