#include "manin/subspace.hpp"

#include "manin/error.hpp"

namespace manin {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return span(ambient, rows);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& generators) {
  Echelon e = manin::rref(Matrix::from_rows(generators, ambient));
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw StructuralError("vector length does not match subspace ambient");
  // In RREF the coefficient of row r is the entry of v at pivot r.
  Vector c(dim());
  Vector rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    c[r] = rest[pivots_[r]];
    if (sgn(c[r]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(rows_(r, j)) != 0) rest[j] -= c[r] * rows_(r, j);
  }
  if (!manin::is_zero(rest)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

Subspace span(const LieAlgebra& g, const std::vector<LieElement>& elements) {
  std::vector<Vector> rows;
  rows.reserve(elements.size());
  for (const auto& x : elements) rows.push_back(g.to_dense(x));
  return Subspace::span(g.dim(), rows);
}

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t) {
  if (s.ambient() != t.ambient()) throw StructuralError("subspaces live in different ambient spaces");
}

}  // namespace

bool equal(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  return s == t;
}

Subspace sum(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  auto rows = s.basis();
  for (auto& r : t.basis()) rows.push_back(std::move(r));
  return Subspace::span(s.ambient(), rows);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  const std::size_t n = s.ambient();
  const std::size_t ks = s.dim();
  const std::size_t kt = t.dim();
  // Solve sum_i a_i s_i - sum_j b_j t_j = 0.
  Matrix m(n, ks + kt);
  for (std::size_t i = 0; i < ks; ++i)
    for (std::size_t e = 0; e < n; ++e) m(e, i) = s.rref()(i, e);
  for (std::size_t j = 0; j < kt; ++j)
    for (std::size_t e = 0; e < n; ++e) m(e, ks + j) = -t.rref()(j, e);
  std::vector<Vector> gens;
  for (const auto& null : nullspace(m)) {
    Vector v(n);
    for (std::size_t i = 0; i < ks; ++i) {
      if (sgn(null[i]) == 0) continue;
      for (std::size_t e = 0; e < n; ++e) v[e] += null[i] * s.rref()(i, e);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace perp(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient() != g.dim()) throw StructuralError("subspace ambient does not match " + g.id());
  const Matrix constraints = s.rref() * g.gram();
  return Subspace::span(g.dim(), nullspace(constraints));
}

bool is_stable_under(const LieAlgebra& g, const Subspace& s, const Subspace& u) {
  if (s.ambient() != g.dim() || u.ambient() != g.dim())
    throw StructuralError("subspace ambient does not match " + g.id());
  const auto sb = s.basis();
  for (const auto& x : u.basis())
    for (const auto& y : sb)
      if (!s.contains(g.bracket(x, y))) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient() != g.dim()) throw StructuralError("subspace ambient does not match " + g.id());
  const auto b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(g.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_direct_sum_of_ambient(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  return s.dim() + t.dim() == s.ambient() && sum(s, t).dim() == s.ambient();
}

Projection::Projection(const Subspace& image, const Subspace& kernel) {
  if (!is_direct_sum_of_ambient(image, kernel)) throw DomainError("projection needs a direct-sum decomposition");
  const std::size_t n = image.ambient();
  // Columns of basis: image basis then kernel basis.
  Matrix basis(n, n);
  const auto ib = image.basis();
  const auto kb = kernel.basis();
  for (std::size_t c = 0; c < ib.size(); ++c)
    for (std::size_t e = 0; e < n; ++e) basis(e, c) = ib[c][e];
  for (std::size_t c = 0; c < kb.size(); ++c)
    for (std::size_t e = 0; e < n; ++e) basis(e, ib.size() + c) = kb[c][e];
  const Matrix inv = *inverse(basis);
  Matrix keep(n, n);
  for (std::size_t c = 0; c < ib.size(); ++c) keep(c, c) = 1;
  matrix_ = basis * keep * inv;
  columns_.reserve(n);
  const Matrix t = transpose(matrix_);
  for (std::size_t i = 0; i < n; ++i) columns_.push_back(t.row_vector(i));
}

}  // namespace manin
