#include "manin/reductive.hpp"

#include <algorithm>
#include <functional>

#include "manin/error.hpp"

namespace manin {

RootSubset::RootSubset(Algebra g, std::vector<std::size_t> ordinals) : g_(std::move(g)), ordinals_(std::move(ordinals)) {
  if (!g_) throw StructuralError("root subset without an algebra");
  std::sort(ordinals_.begin(), ordinals_.end());
  ordinals_.erase(std::unique(ordinals_.begin(), ordinals_.end()), ordinals_.end());
  mask_.assign(g_->num_roots(), false);
  for (auto k : ordinals_) {
    if (k >= g_->num_roots()) throw DomainError("root ordinal out of range for " + g_->id());
    mask_[k] = true;
  }
}

RootSubset RootSubset::empty(Algebra g) { return RootSubset(std::move(g), {}); }

RootSubset RootSubset::all(Algebra g) {
  std::vector<std::size_t> all(g->num_roots());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return RootSubset(std::move(g), std::move(all));
}

bool RootSubset::includes(const RootSubset& other) const {
  return std::all_of(other.ordinals_.begin(), other.ordinals_.end(), [this](std::size_t k) { return contains(k); });
}

RootSubset RootSubset::symmetrized() const {
  auto out = ordinals_;
  for (auto k : ordinals_) out.push_back(g_->negative(k));
  return RootSubset(g_, std::move(out));
}

RootSubset RootSubset::minus(const RootSubset& other) const {
  std::vector<std::size_t> out;
  for (auto k : ordinals_)
    if (!other.contains(k)) out.push_back(k);
  return RootSubset(g_, std::move(out));
}

std::strong_ordering operator<=>(const RootSubset& a, const RootSubset& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.ordinals_ <=> b.ordinals_;
}

CartanElement::CartanElement(const LieAlgebra& g, LieElement x) : value_(std::move(x)) {
  g.check(value_);
  for (const auto& [i, c] : value_.terms())
    if (!g.is_cartan_index(i)) throw DomainError("element has a component outside the Cartan subalgebra");
}

CartanElement CartanElement::from_coords(const LieAlgebra& g, const Vector& coords) {
  if (coords.size() != g.cartan_dim()) throw StructuralError("Cartan coordinate vector has the wrong length");
  LieElement x;
  for (std::size_t i = 0; i < coords.size(); ++i) x.add(i, coords[i]);
  return CartanElement(g, std::move(x));
}

CartanElement CartanElement::from_diagonal(const LieAlgebra& g, const std::vector<Rational>& diagonal) {
  if (diagonal.size() != g.matrix_size()) throw StructuralError("diagonal has the wrong length for " + g.id());
  Matrix m(diagonal.size(), diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal[i];
  return CartanElement(g, g.from_matrix(m));
}

Vector CartanElement::coords(const LieAlgebra& g) const {
  Vector v(g.cartan_dim());
  for (const auto& [i, c] : value_.terms()) v[i] = c;
  return v;
}

std::string root_label(const LieAlgebra& g, std::size_t ordinal) {
  std::string out = "[";
  for (int c : g.simple_coords(g.root(ordinal))) out += (out.size() > 1 ? "," : "") + std::to_string(c);
  return out + "]";
}

std::string subset_label(const RootSubset& s) {
  std::string out = "[";
  for (auto k : s.ordinals()) out += (out.size() > 1 ? "," : "") + root_label(s.g(), k);
  return out + "]";
}

Rational root_value(const LieAlgebra& g, std::size_t ordinal, const CartanElement& h) {
  const Vector& f = g.root_functional(ordinal);
  Rational s;
  for (const auto& [i, c] : h.value().terms()) s += c * f[i];
  return s;
}

bool is_reductive(const RootSubset& s) {
  const LieAlgebra& g = s.g();
  for (auto a : s.ordinals()) {
    if (!s.contains(g.negative(a))) return false;
    for (auto b : s.ordinals()) {
      if (auto c = g.root_sum(a, b); c && !s.contains(*c)) return false;
    }
  }
  return true;
}

std::vector<RootSubset> enumerate_reductive(const Algebra& g, const RootSubset& contains) {
  if (!is_reductive(contains)) throw PreconditionError("enumerate_reductive: the required subset is not reductive");
  std::vector<std::size_t> positives;
  for (std::size_t k = 0; k < g->num_roots(); ++k)
    if (g->is_positive(k)) positives.push_back(k);

  enum class State { open, in, out };
  std::vector<State> state(g->num_roots(), State::open);
  auto set_pair = [&](std::size_t k, State s) {
    state[k] = s;
    state[g->negative(k)] = s;
  };
  for (auto k : contains.ordinals()) set_pair(k, State::in);

  // A partial assignment is dead if two included roots sum to an excluded root.
  auto consistent = [&] {
    for (std::size_t a = 0; a < state.size(); ++a) {
      if (state[a] != State::in) continue;
      for (std::size_t b = a; b < state.size(); ++b) {
        if (state[b] != State::in) continue;
        if (auto c = g->root_sum(a, b); c && state[*c] == State::out) return false;
      }
    }
    return true;
  };

  std::vector<RootSubset> found;
  std::function<void(std::size_t)> descend = [&](std::size_t pos) {
    if (pos == positives.size()) {
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < state.size(); ++k)
        if (state[k] == State::in) members.push_back(k);
      RootSubset candidate(g, std::move(members));
      if (is_reductive(candidate)) found.push_back(std::move(candidate));
      return;
    }
    const std::size_t k = positives[pos];
    if (state[k] != State::open) {
      descend(pos + 1);
      return;
    }
    for (State choice : {State::in, State::out}) {
      set_pair(k, choice);
      if (consistent()) descend(pos + 1);
    }
    set_pair(k, State::open);
  };
  descend(0);
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

void require_nested_reductive(const RootSubset& n, const RootSubset& u) {
  if (!same_ambient(n.g(), u.g())) throw StructuralError("root subsets of different algebras");
  if (!is_reductive(n) || !is_reductive(u)) throw PreconditionError("N and U must both be reductive");
  if (!n.includes(u)) throw PreconditionError("U must be contained in N");
}

}  // namespace

bool is_regular(const CartanElement& h, const RootSubset& n, const RootSubset& u) {
  const LieAlgebra& g = n.g();
  for (auto a : u.ordinals())
    if (sgn(root_value(g, a, h)) != 0) return false;
  for (auto a : n.ordinals())
    if (!u.contains(a) && sgn(root_value(g, a, h)) == 0) return false;
  return true;
}

void require_regular(const CartanElement& h, const RootSubset& n, const RootSubset& u) {
  require_nested_reductive(n, u);
  const LieAlgebra& g = n.g();
  for (auto a : u.ordinals())
    if (sgn(root_value(g, a, h)) != 0)
      throw DomainError("regularity violated at root " + root_label(g, a) + ": alpha(h) != 0 for alpha in U");
  for (auto a : n.ordinals())
    if (!u.contains(a) && sgn(root_value(g, a, h)) == 0)
      throw DomainError("regularity violated at root " + root_label(g, a) + ": alpha(h) = 0 for alpha in N \\ U");
}

std::optional<CartanElement> regular_element(const RootSubset& n, const RootSubset& u) {
  require_nested_reductive(n, u);
  const LieAlgebra& g = n.g();
  const std::size_t r = g.cartan_dim();
  Matrix constraints(u.size(), r);
  for (std::size_t row = 0; row < u.size(); ++row)
    for (std::size_t c = 0; c < r; ++c) constraints(row, c) = g.root_functional(u.ordinals()[row])[c];
  const std::vector<Vector> null = nullspace(constraints);

  const RootSubset outside = n.minus(u);
  // Each outside root restricted to the nullspace: values on v_1..v_k.
  std::vector<Vector> restricted;
  for (auto a : outside.ordinals()) {
    Vector vals(null.size());
    bool nonzero = false;
    for (std::size_t j = 0; j < null.size(); ++j) {
      for (std::size_t c = 0; c < r; ++c) vals[j] += g.root_functional(a)[c] * null[j][c];
      nonzero = nonzero || sgn(vals[j]) != 0;
    }
    if (!nonzero) return std::nullopt;
    restricted.push_back(std::move(vals));
  }

  // h(t) = sum_j t^j v_j; every constraint is a nonzero polynomial in t of degree < k.
  const std::size_t attempts = outside.size() * (null.size() + 1) + 1;
  for (std::size_t t = 1; t <= attempts; ++t) {
    bool ok = true;
    for (const auto& vals : restricted) {
      Rational value, power = 1;
      for (const auto& v : vals) {
        value += power * v;
        power *= static_cast<long>(t);
      }
      if (sgn(value) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Vector coords(r);
    Rational power = 1;
    for (const auto& v : null) {
      for (std::size_t c = 0; c < r; ++c) coords[c] += power * v[c];
      power *= static_cast<long>(t);
    }
    CartanElement h = CartanElement::from_coords(g, coords);
    if (!is_regular(h, n, u)) throw InvariantFailure("regular_element produced a non-regular witness");
    return h;
  }
  throw InvariantFailure("regular_element exhausted its search bound");
}

Subspace root_subspace(const RootSubset& s) {
  const LieAlgebra& g = s.g();
  std::vector<LieElement> gens;
  for (std::size_t i = 0; i < g.cartan_dim(); ++i) gens.push_back(LieElement::basis(i));
  for (auto k : s.ordinals()) gens.push_back(LieElement::basis(g.root_index(k)));
  return span(g, gens);
}

Subspace subalgebra_from_subset(const RootSubset& u) {
  if (!is_reductive(u)) throw PreconditionError("subalgebra_from_subset: subset is not reductive");
  return root_subspace(u);
}

Subspace complement_from_subset(const RootSubset& u) {
  if (!is_reductive(u)) throw PreconditionError("complement_from_subset: subset is not reductive");
  const LieAlgebra& g = u.g();
  std::vector<LieElement> gens;
  for (std::size_t k = 0; k < g.num_roots(); ++k)
    if (!u.contains(k)) gens.push_back(LieElement::basis(g.root_index(k)));
  return span(g, gens);
}

}  // namespace manin
