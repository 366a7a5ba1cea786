#include "manin/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "manin/error.hpp"

namespace manin {

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  if (a.coords.size() != b.coords.size()) throw StructuralError("root length mismatch");
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

LieElement LieElement::basis(std::size_t index, const Rational& coeff) {
  LieElement x;
  x.add(index, coeff);
  return x;
}

Rational LieElement::coeff(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add(std::size_t index, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [i, c] : other.terms_) add(i, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [i, c] : other.terms_) add(i, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  return *this;
}

LieAlgebra::LieAlgebra(Realization r)
    : id_(std::move(r.id)),
      series_(std::move(r.series)),
      rank_(r.rank),
      cartan_dim_(r.cartan_dim),
      matrix_size_(r.basis.empty() ? 0 : r.basis.front().rows()),
      form_scale_(std::move(r.form_scale)),
      basis_(std::move(r.basis)),
      roots_(std::move(r.roots)),
      simple_roots_(std::move(r.simple_roots)) {
  const std::size_t d = basis_.size();
  if (cartan_dim_ + roots_.size() != d) throw StructuralError("basis size does not match Cartan plus root count");
  if (sgn(form_scale_) == 0) throw DomainError("form scale must be nonzero");

  for (std::size_t k = 0; k < roots_.size(); ++k) ordinal_.emplace(roots_[k], k);
  if (ordinal_.size() != roots_.size()) throw StructuralError("duplicate root in realization");

  // Pick d matrix entries on which the flattened basis is invertible.
  const std::size_t n2 = matrix_size_ * matrix_size_;
  Matrix flat(d, n2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t e = 0; e < n2; ++e) flat(i, e) = basis_[i](e / matrix_size_, e % matrix_size_);
  const Echelon ech = rref(flat);
  if (ech.pivots.size() != d) throw StructuralError("realization basis is linearly dependent");
  probe_entries_ = ech.pivots;
  Matrix probe(d, d);  // probe(e, i) = entry probe_entries_[e] of basis i
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t i = 0; i < d; ++i) probe(e, i) = flat(i, probe_entries_[e]);
  probe_inverse_ = *inverse(probe);

  table_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const LieElement c = from_matrix(commutator(basis_[i], basis_[j]));
      auto& terms = table_[i * d + j];
      for (const auto& [k, v] : c.terms()) terms.push_back({k, v});
    }
  }

  gram_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram_(i, j) = form_scale_ * trace(basis_[i] * basis_[j]);

  negatives_.resize(roots_.size());
  functionals_.resize(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    auto neg = ordinal_of(-roots_[k]);
    if (!neg) throw StructuralError("root system not closed under negation");
    negatives_[k] = *neg;
    Vector f(cartan_dim_);
    const std::size_t ek = root_index(k);
    for (std::size_t h = 0; h < cartan_dim_; ++h) {
      const auto terms = bracket_terms(h, ek);
      if (terms.size() > 1 || (terms.size() == 1 && terms[0].index != ek))
        throw StructuralError("root vector is not a Cartan eigenvector");
      if (terms.size() == 1) f[h] = terms[0].coeff;
    }
    functionals_[k] = std::move(f);
  }

  // Simple-root coordinates of every root.
  const std::size_t len = roots_.empty() ? 0 : roots_.front().coords.size();
  Matrix s(len, simple_roots_.size());
  for (std::size_t c = 0; c < simple_roots_.size(); ++c)
    for (std::size_t e = 0; e < len; ++e) s(e, c) = simple_roots_[c].coords.at(e);
  simple_coords_.resize(roots_.size());
  positive_.resize(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    Vector rhs(len);
    for (std::size_t e = 0; e < len; ++e) rhs[e] = roots_[k].coords[e];
    auto sol = solve(s, rhs);
    if (!sol || s * *sol != rhs) throw StructuralError("root outside the span of the simple roots");
    bool nonneg = true;
    for (const auto& q : *sol) {
      if (q.get_den() != 1) throw StructuralError("non-integral simple-root coordinates");
      simple_coords_[k].push_back(static_cast<int>(q.get_num().get_si()));
      nonneg = nonneg && sgn(q) >= 0;
    }
    positive_[k] = nonneg;
  }
}

std::optional<std::size_t> LieAlgebra::ordinal_of(const Root& r) const {
  auto it = ordinal_.find(r);
  if (it == ordinal_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> LieAlgebra::root_sum(std::size_t a, std::size_t b) const {
  return ordinal_of(roots_.at(a) + roots_.at(b));
}

std::optional<std::size_t> LieAlgebra::root_at_index(std::size_t basis_index) const {
  if (basis_index < cartan_dim_ || basis_index >= dim()) return std::nullopt;
  return basis_index - cartan_dim_;
}

std::vector<int> LieAlgebra::simple_coords(const Root& r) const {
  auto k = ordinal_of(r);
  if (!k) throw DomainError("not a root of " + id_);
  return simple_coords_[*k];
}

std::size_t LieAlgebra::ordinal_from_simple(const std::vector<int>& coords) const {
  if (coords.size() != simple_roots_.size())
    throw DomainError("root of " + id_ + " needs " + std::to_string(simple_roots_.size()) + " simple-root coordinates");
  Root r{std::vector<int>(roots_.empty() ? 0 : roots_.front().coords.size(), 0)};
  for (std::size_t c = 0; c < coords.size(); ++c)
    for (std::size_t e = 0; e < r.coords.size(); ++e) r.coords[e] += coords[c] * simple_roots_[c].coords[e];
  auto k = ordinal_of(r);
  if (!k) throw DomainError("simple-root coordinates do not describe a root of " + id_);
  return *k;
}

std::span<const LieAlgebra::Term> LieAlgebra::bracket_terms(std::size_t i, std::size_t j) const {
  return table_.at(i * dim() + j);
}

void LieAlgebra::check(const LieElement& x) const {
  if (!x.terms().empty() && x.terms().rbegin()->first >= dim())
    throw StructuralError("element index out of range for " + id_);
}

void LieAlgebra::check(const Vector& x) const {
  if (x.size() != dim()) throw StructuralError("vector length does not match dim " + id_);
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  check(x);
  check(y);
  LieElement out;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      for (const auto& t : bracket_terms(i, j)) out.add(t.index, a * b * t.coeff);
  return out;
}

Rational LieAlgebra::form(const LieElement& x, const LieElement& y) const {
  check(x);
  check(y);
  Rational s;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      if (sgn(gram_(i, j)) != 0) s += a * b * gram_(i, j);
  return s;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  check(x);
  check(y);
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational ab = x[i] * y[j];
      for (const auto& t : bracket_terms(i, j)) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

Rational LieAlgebra::form(const Vector& x, const Vector& y) const {
  check(x);
  check(y);
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0 && sgn(gram_(i, j)) != 0) s += x[i] * y[j] * gram_(i, j);
  }
  return s;
}

Matrix LieAlgebra::to_matrix(const LieElement& x) const {
  check(x);
  Matrix m(matrix_size_, matrix_size_);
  for (const auto& [i, c] : x.terms()) m = m + c * basis_[i];
  return m;
}

LieElement LieAlgebra::from_matrix(const Matrix& m) const {
  if (m.rows() != matrix_size_ || m.cols() != matrix_size_) throw StructuralError("matrix size mismatch for " + id_);
  const std::size_t d = dim();
  Vector probe(d);
  for (std::size_t e = 0; e < d; ++e) probe[e] = m(probe_entries_[e] / matrix_size_, probe_entries_[e] % matrix_size_);
  const Vector c = probe_inverse_ * probe;
  LieElement x;
  for (std::size_t i = 0; i < d; ++i) x.add(i, c[i]);
  Matrix back(matrix_size_, matrix_size_);
  for (const auto& [i, v] : x.terms()) back = back + v * basis_[i];
  if (back != m) throw DomainError("matrix does not lie in " + id_);
  return x;
}

Vector LieAlgebra::to_dense(const LieElement& x) const {
  check(x);
  Vector v(dim());
  for (const auto& [i, c] : x.terms()) v[i] = c;
  return v;
}

LieElement LieAlgebra::from_dense(std::span<const Rational> v) const {
  if (v.size() != dim()) throw StructuralError("vector length does not match dim " + id_);
  LieElement x;
  for (std::size_t i = 0; i < v.size(); ++i) x.add(i, v[i]);
  return x;
}

namespace {

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Algebra build_type_a(int rank, const AlgebraOptions& options) {
  const std::size_t n = static_cast<std::size_t>(rank) + 1;
  LieAlgebra::Realization r;
  r.id = "A" + std::to_string(rank);
  r.series = "A";
  r.rank = rank;
  r.cartan_dim = n - 1;
  r.form_scale = options.form_scale;
  for (std::size_t k = 0; k + 1 < n; ++k) r.basis.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));

  auto e_root = [n](std::size_t i, std::size_t j) {
    Root a{std::vector<int>(n, 0)};
    a.coords[i] = 1;
    a.coords[j] = -1;
    return a;
  };
  std::vector<Root> positives, negatives;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      positives.push_back(e_root(i, j));
      negatives.push_back(e_root(j, i));
    }
  std::sort(positives.begin(), positives.end());
  std::sort(negatives.begin(), negatives.end());
  for (const auto* group : {&positives, &negatives}) {
    for (const Root& a : *group) {
      const auto i = static_cast<std::size_t>(std::find(a.coords.begin(), a.coords.end(), 1) - a.coords.begin());
      const auto j = static_cast<std::size_t>(std::find(a.coords.begin(), a.coords.end(), -1) - a.coords.begin());
      r.roots.push_back(a);
      r.basis.push_back(unit(n, i, j));
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) r.simple_roots.push_back(e_root(k, k + 1));
  return std::make_shared<const LieAlgebra>(std::move(r));
}

}  // namespace

Algebra build_algebra(std::string_view series, int rank, const AlgebraOptions& options) {
  if (series != "A") throw UnsupportedSeries(std::string(series));
  if (rank < 1 || rank > options.max_rank)
    throw DomainError("rank " + std::to_string(rank) + " outside 1.." + std::to_string(options.max_rank));
  return build_type_a(rank, options);
}

Algebra build_algebra(std::string_view id, const AlgebraOptions& options) {
  std::size_t split = 0;
  while (split < id.size() && std::isalpha(static_cast<unsigned char>(id[split]))) ++split;
  int rank = 0;
  const auto digits = id.substr(split);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (split == 0 || digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("malformed algebra identifier: \"" + std::string(id) + "\"");
  return build_algebra(id.substr(0, split), rank, options);
}

LieElement bracket(const LieAlgebra& g, const LieElement& x, const LieElement& y) { return g.bracket(x, y); }

Rational form(const LieAlgebra& g, const LieElement& x, const LieElement& y) { return g.form(x, y); }

Rational structure_constant(const LieAlgebra& g, std::size_t alpha, std::size_t beta) {
  const auto sum = g.root_sum(alpha, beta);
  if (!sum) throw DomainError("structure constant requested for a pair whose sum is not a root");
  const LieElement c = g.bracket(LieElement::basis(g.root_index(alpha)), LieElement::basis(g.root_index(beta)));
  const std::size_t target = g.root_index(*sum);
  if (c.terms().size() != 1 || c.terms().begin()->first != target)
    throw InvariantFailure("[g_alpha, g_beta] not contained in g_{alpha+beta}");
  return c.coeff(target);
}

std::size_t matrix_unit_index(const LieAlgebra& g, std::size_t i, std::size_t j) {
  const std::size_t n = g.matrix_size();
  if (i == j || i >= n || j >= n) throw DomainError("matrix unit index out of range");
  Root a{std::vector<int>(n, 0)};
  a.coords[i] = 1;
  a.coords[j] = -1;
  auto k = g.ordinal_of(a);
  if (!k) throw DomainError("matrix unit is not a root vector of " + g.id());
  return g.root_index(*k);
}

bool same_ambient(const LieAlgebra& a, const LieAlgebra& b) {
  return &a == &b || (a.id() == b.id() && a.form_scale() == b.form_scale());
}

}  // namespace manin
