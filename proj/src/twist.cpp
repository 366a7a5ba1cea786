#include "manin/twist.hpp"

namespace manin {

namespace {

void require_skew(const Tensor2& s) {
  if (!is_skew(s)) throw DomainError("s is not skew");
}

}  // namespace

Tensor2 Cobracket::apply(const LieElement& x) const {
  Tensor2 out(g);
  for (const auto& [i, c] : x.terms()) out += c * images.at(i);
  return out;
}

Cobracket cobracket_from_r(const Tensor2& rho) {
  const LieAlgebra& g = rho.g();
  if (!is_invariant(rho + flip(rho), Subspace::full(g.dim())))
    throw PreconditionError("rho + rho^21 is not g-invariant");
  Cobracket d{rho.algebra(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) d.images.push_back(ad_action2(LieElement::basis(i), rho));
  return d;
}

bool is_cocycle(const Cobracket& d) {
  const LieAlgebra& g = *d.g;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      auto x = LieElement::basis(i), y = LieElement::basis(j);
      if (d.apply(g.bracket(x, y)) != ad_action2(x, d.images[j]) - ad_action2(y, d.images[i])) return false;
    }
  return true;
}

bool is_skew(const Cobracket& d) {
  for (const auto& t : d.images)
    if (!is_skew(t)) return false;
  return true;
}

Tensor3 delta_tensor_id(const Cobracket& d, const Tensor2& s) {
  Tensor3 out(d.g);
  for (const auto& [k, c] : s.terms())
    for (const auto& [ab, v] : d.images.at(k[0]).terms()) out.add({ab[0], ab[1], k[1]}, c * v);
  return out;
}

TwistCheck twist_condition_general(const Cobracket& d, const Tensor2& s) {
  require_skew(s);
  Tensor3 residual = cyb(s) - alt3(delta_tensor_id(d, s));
  bool holds = residual.is_zero();
  return {holds, std::move(residual)};
}

TwistCheck twist_condition_triangular(const Tensor2& rho, const Tensor2& s) {
  require_skew(s);
  Tensor3 residual = cyb(s) + mixed_bracket(rho, s) + mixed_bracket(s, rho);
  bool holds = residual.is_zero();
  return {holds, std::move(residual)};
}

TwistResult apply_twist(const Tensor2& rho, const Tensor2& s) {
  auto check = twist_condition_triangular(rho, s);
  if (!check.holds) throw TwistConditionError("twist condition fails", std::move(check.residual));
  TwistResult out;
  out.twisted = rho + s;
  out.rho_solves = cyb(rho).is_zero();
  out.twisted_solves = cyb(out.twisted).is_zero();
  if (out.rho_solves && !out.twisted_solves) throw InvariantFailure("twisted tensor does not solve the CYBE");
  return out;
}

DualSubspace s_graph(const Tensor2& s) {
  require_skew(s);
  const Algebra& g = s.algebra();
  std::vector<DualElement> gens;
  for (std::size_t i = 0; i < g->dim(); ++i) {
    auto c = LieElement::basis(i);
    gens.push_back({contract_first(s, c), c});
  }
  return DualSubspace::span(g, gens);
}

}  // namespace manin
