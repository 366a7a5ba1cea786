#include "manin/rmatrix.hpp"

#include "manin/error.hpp"

namespace manin {

namespace {

// <b_alpha, b_{-alpha}> for the raw basis vectors; the normalized pair is
// E_alpha = b_alpha for positive alpha and E_alpha = b_alpha / s for negative alpha.
Rational pair_scale(const LieAlgebra& g, std::size_t ordinal) {
  return g.form(LieElement::basis(g.root_index(ordinal)), LieElement::basis(g.root_index(g.negative(ordinal))));
}

void require_reductive(const RootSubset& u) {
  if (!is_reductive(u)) throw PreconditionError("U is not reductive: " + subset_label(u));
}

}  // namespace

void CoefficientFunction::set(std::size_t ordinal, const Rational& value) {
  if (!g_) throw StructuralError("coefficient function without an algebra");
  if (ordinal >= g_->num_roots()) throw DomainError("root ordinal out of range");
  if (sgn(value) == 0)
    values_.erase(ordinal);
  else
    values_[ordinal] = value;
}

Rational CoefficientFunction::at(std::size_t ordinal) const {
  auto it = values_.find(ordinal);
  return it == values_.end() ? Rational(0) : it->second;
}

RMatrixCandidate build_x(const RootSubset& n, const CartanElement& h, const RootSubset& u) {
  require_regular(h, n, u);
  const LieAlgebra& g = n.g();
  CoefficientFunction f(n.algebra());
  for (auto a : n.ordinals())
    if (!u.contains(a)) f.set(a, 1 / root_value(g, a, h));
  return RMatrixCandidate{tensor_from_coefficients(f), u, Tensor2(n.algebra()), Provenance{n, h}};
}

Tensor2 tensor_from_coefficients(const CoefficientFunction& f) {
  const Algebra& g = f.algebra();
  Tensor2 t(g);
  for (const auto& [a, x] : f.values())
    t.add({g->root_index(a), g->root_index(g->negative(a))}, x / pair_scale(*g, a));
  return t;
}

std::optional<CoefficientFunction> diagonal_coefficients(const Tensor2& t, const RootSubset& u) {
  const LieAlgebra& g = u.g();
  CoefficientFunction f(u.algebra());
  for (const auto& [k, c] : t.terms()) {
    auto a = g.root_at_index(k[0]);
    auto b = g.root_at_index(k[1]);
    if (!a || !b || *b != g.negative(*a) || u.contains(*a)) return std::nullopt;
    f.set(*a, c * pair_scale(g, *a));
  }
  return f;
}

namespace {

struct ConditionWitness {
  std::string condition;
  std::vector<std::size_t> roots;
};

// (d), (e), (f) in that order, on a coefficient function over R \ U.
std::optional<ConditionWitness> first_violation_d(const CoefficientFunction& f, const RootSubset& u) {
  const LieAlgebra& g = u.g();
  for (std::size_t a = 0; a < g.num_roots(); ++a)
    if (!u.contains(a) && f.at(g.negative(a)) != -f.at(a)) return ConditionWitness{"d", {a, g.negative(a)}};
  return std::nullopt;
}

std::optional<ConditionWitness> first_violation_e(const CoefficientFunction& f, const RootSubset& u) {
  const LieAlgebra& g = u.g();
  for (std::size_t a = 0; a < g.num_roots(); ++a) {
    if (u.contains(a)) continue;
    for (auto c : u.ordinals()) {
      auto s = g.root_sum(a, c);
      if (!s) continue;
      std::size_t b = g.negative(*s);
      if (u.contains(b)) continue;
      if (sgn(f.at(a) + f.at(b)) != 0) return ConditionWitness{"e", {a, b, c}};
    }
  }
  return std::nullopt;
}

std::optional<ConditionWitness> first_violation_f(const CoefficientFunction& f, const RootSubset& u) {
  const LieAlgebra& g = u.g();
  for (std::size_t a = 0; a < g.num_roots(); ++a) {
    if (u.contains(a)) continue;
    for (std::size_t b = 0; b < g.num_roots(); ++b) {
      if (u.contains(b)) continue;
      auto s = g.root_sum(a, b);
      if (!s) continue;
      std::size_t c = g.negative(*s);
      if (u.contains(c)) continue;
      Rational q = f.at(a) * f.at(b) + f.at(b) * f.at(c) + f.at(c) * f.at(a);
      if (sgn(q) != 0) return ConditionWitness{"f", {a, b, c}};
    }
  }
  return std::nullopt;
}

std::string describe(const LieAlgebra& g, const ConditionWitness& w) {
  std::string out = "condition (" + w.condition + ") fails at";
  for (auto r : w.roots) out += " " + root_label(g, r);
  return out;
}

}  // namespace

MembershipReport membership_report(const RMatrixCandidate& c) {
  const RootSubset& u = c.u;
  require_reductive(u);
  const LieAlgebra& g = u.g();
  MembershipReport rep;
  Tensor2 omega = c.omega;
  if (!omega.algebra()) omega = Tensor2(u.algebra());
  rep.omega_nonzero = !omega.is_zero();
  bool omega_ok = is_symmetric(omega) && is_invariant(omega, Subspace::full(g.dim()));
  if (!omega_ok) rep.failures.push_back("omega is not a symmetric invariant tensor");
  Tensor2 y = c.tensor - Rational(1, 2) * omega;

  // Structural path.
  auto f = diagonal_coefficients(y, u);
  rep.diagonal_form = f.has_value();
  if (!f) {
    rep.failures.push_back("structural: not of the form sum x_alpha E_alpha (x) E_{-alpha} over R \\ U");
  } else {
    auto d = first_violation_d(*f, u);
    auto e = d ? std::nullopt : first_violation_e(*f, u);
    if (d || e) rep.failures.push_back("structural: " + describe(g, d ? *d : *e));
    rep.wedge_structural = omega_ok && !d && !e;
    if (rep.wedge_structural) {
      auto q = first_violation_f(*f, u);
      if (q) rep.failures.push_back("structural: " + describe(g, *q));
      rep.momega_structural = !q;
    }
  }

  // Tensor-level path.
  Subspace us = subalgebra_from_subset(u), ms = complement_from_subset(u);
  Projection p(ms, us);
  bool skew = is_skew(y);
  bool on_m = project_legs(y, p) == y;
  bool invariant = is_invariant(y, us);
  if (!skew) rep.failures.push_back("tensor: x - omega/2 is not skew");
  if (!on_m) rep.failures.push_back("tensor: not supported on m (x) m");
  if (!invariant) rep.failures.push_back("tensor: not invariant under u");
  rep.wedge_tensor = omega_ok && skew && on_m && invariant;
  if (rep.wedge_tensor) {
    bool vanishes = project_legs(cyb(c.tensor), p).is_zero();
    if (!vanishes) rep.failures.push_back("tensor: CYB(x) is nonzero in the quotient by u");
    rep.momega_tensor = vanishes;
  }
  return rep;
}

bool is_in_wedge2m_u(const Tensor2& t, const RootSubset& u) {
  RMatrixCandidate c{t, u, Tensor2(u.algebra()), std::nullopt};
  auto rep = membership_report(c);
  if (rep.wedge_structural != rep.wedge_tensor)
    throw InvariantFailure("structural and tensor-level tests for (wedge^2 m)^u disagree");
  return rep.wedge_tensor;
}

bool is_in_momega(const RMatrixCandidate& c) {
  auto rep = membership_report(c);
  if (!rep.omega_nonzero && !rep.agree())
    throw InvariantFailure("structural and tensor-level tests for M_Omega disagree");
  return rep.momega_tensor;
}

ClassifyResult classify_coefficients(const CoefficientFunction& f, const RootSubset& u) {
  require_reductive(u);
  const LieAlgebra& g = u.g();
  auto reject = [&](ConditionWitness w, std::string message) {
    return ClassifyResult(Rejection{w.condition, w.roots, std::move(message)});
  };

  for (const auto& [a, x] : f.values())
    if (u.contains(a)) return reject({"domain", {a}}, "coefficient given on root " + root_label(g, a) + " of U");
  if (auto w = first_violation_d(f, u)) return reject(*w, describe(g, *w));

  std::vector<std::size_t> members = u.ordinals();
  for (const auto& [a, x] : f.values()) members.push_back(a);
  RootSubset n(u.algebra(), members);
  for (auto a : n.ordinals())
    for (auto b : n.ordinals())
      if (auto s = g.root_sum(a, b); s && !n.contains(*s))
        return reject({"reductive", {a, b}}, "support together with U is not reductive: " + root_label(g, a) + " + " +
                                                 root_label(g, b) + " = " + root_label(g, *s) + " is missing");

  if (auto w = first_violation_e(f, u)) return reject(*w, describe(g, *w));
  if (auto w = first_violation_f(f, u)) return reject(*w, describe(g, *w));

  // alpha(h) = 1/x_alpha on N \ U and alpha(h) = 0 on U.
  const std::size_t r = g.cartan_dim();
  Matrix a(n.size(), r);
  Vector rhs(n.size());
  for (std::size_t row = 0; row < n.size(); ++row) {
    std::size_t k = n.ordinals()[row];
    for (std::size_t c = 0; c < r; ++c) a(row, c) = g.root_functional(k)[c];
    if (!u.contains(k)) rhs[row] = 1 / f.at(k);
  }
  auto sol = solve(a, rhs);
  if (!sol) return reject({"f", {}}, "no Cartan element has alpha(h) = 1/x_alpha on the support");
  CartanElement h = CartanElement::from_coords(g, *sol);
  if (!is_regular(h, n, u)) throw InvariantFailure("classify_coefficients produced a non-regular h");
  return Classification{n, h};
}

}  // namespace manin
