#include "doctest.h"
#include "oracles.hpp"

#include "manin/error.hpp"
#include "manin/rmatrix.hpp"

using namespace manin;
using oracle::E;
using oracle::H;

namespace {

RootSubset pm(const Algebra& g, std::vector<std::pair<std::size_t, std::size_t>> units) {
  std::vector<std::size_t> out;
  for (auto [i, j] : units) {
    out.push_back(oracle::ordinal(*g, i, j));
    out.push_back(oracle::ordinal(*g, j, i));
  }
  return RootSubset(g, out);
}

// Diagonal-form coefficient functions over the grid, one value per positive root outside U.
std::vector<CoefficientFunction> grid(const Algebra& g, const RootSubset& u) {
  const Rational vals[] = {-1, Rational(-1, 2), 0, Rational(1, 2), 1};
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < g->num_roots(); ++k)
    if (g->is_positive(k) && !u.contains(k)) pos.push_back(k);
  std::vector<CoefficientFunction> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < pos.size(); ++i) total *= 5;
  for (std::size_t code = 0; code < total; ++code) {
    CoefficientFunction f(g);
    std::size_t c = code;
    for (auto a : pos) {
      f.set(a, vals[c % 5]);
      f.set(g->negative(a), -vals[c % 5]);
      c /= 5;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("build_x examples") {
  auto g1 = build_algebra("A1");
  auto h1 = CartanElement::from_diagonal(*g1, {1, -1});
  CHECK(build_x(RootSubset::empty(g1), h1, RootSubset::empty(g1)).tensor.is_zero());
  CHECK(build_x(RootSubset::all(g1), CartanElement(), RootSubset::all(g1)).tensor.is_zero());
  auto x = build_x(RootSubset::all(g1), h1, RootSubset::empty(g1));
  Tensor2 expect = Rational(1, 2) * tensor_product(g1, E(*g1, 1, 2), E(*g1, 2, 1)) -
                   Rational(1, 2) * tensor_product(g1, E(*g1, 2, 1), E(*g1, 1, 2));
  CHECK(x.tensor == expect);
  REQUIRE(x.provenance);
  CHECK(x.provenance->h == h1);

  auto g = build_algebra("A2");
  auto h = CartanElement::from_diagonal(*g, {2, 0, -2});
  auto x2 = build_x(RootSubset::all(g), h, RootSubset::empty(g));
  CHECK(x2.tensor.size() == 6);
  for (std::size_t a = 0; a < g->num_roots(); ++a) {
    Rational v = oracle::root_on_diagonal(*g, a, h);
    CHECK(x2.tensor.coeff({g->root_index(a), g->root_index(g->negative(a))}) == 1 / v);
  }
  CHECK(x2.tensor.coeff({matrix_unit_index(*g, 0, 2), matrix_unit_index(*g, 2, 0)}) == Rational(1, 4));
  CHECK(is_skew(x2.tensor));
}

TEST_CASE("build_x rejects non-regular elements by root") {
  auto g = build_algebra("A2");
  auto h = CartanElement::from_diagonal(*g, {1, 1, -2});
  try {
    build_x(RootSubset::all(g), h, RootSubset::empty(g));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("[1,0]") != std::string::npos);
  }
  auto u = pm(g, {{1, 3}});
  CHECK_THROWS_AS(build_x(RootSubset::all(g), CartanElement::from_diagonal(*g, {2, 0, -2}), u), DomainError);
  CHECK_THROWS_AS(build_x(u, h, RootSubset::all(g)), PreconditionError);
}

TEST_CASE("membership examples") {
  auto g1 = build_algebra("A1");
  auto e1 = RootSubset::empty(g1);
  Tensor2 sym = tensor_product(g1, E(*g1, 1, 2), E(*g1, 2, 1)) + tensor_product(g1, E(*g1, 2, 1), E(*g1, 1, 2));
  CHECK_FALSE(is_in_wedge2m_u(sym, e1));
  CHECK(is_in_momega(RMatrixCandidate{Tensor2(g1), e1, Tensor2(g1), std::nullopt}));

  auto g = build_algebra("A2");
  auto u = pm(g, {{1, 2}});
  std::size_t a2 = oracle::ordinal(*g, 2, 3), a12 = oracle::ordinal(*g, 1, 3);
  CoefficientFunction f(g);
  f.set(a2, 1);
  f.set(g->negative(a2), -1);
  f.set(a12, -1);
  f.set(g->negative(a12), 1);
  auto rep = membership_report(RMatrixCandidate{tensor_from_coefficients(f), u, Tensor2(g), std::nullopt});
  CHECK(rep.diagonal_form);
  CHECK_FALSE(rep.wedge_structural);
  CHECK_FALSE(rep.wedge_tensor);
  CHECK_FALSE(is_in_wedge2m_u(tensor_from_coefficients(f), u));

  // x_{a1} = x_{a2} = x_{a1+a2} = 1: quadratic form on (a1, a2, -a1-a2) equals -1.
  auto e = RootSubset::empty(g);
  CoefficientFunction q(g);
  for (std::size_t k = 0; k < 3; ++k) {
    q.set(k, 1);
    q.set(g->negative(k), -1);
  }
  RMatrixCandidate c{tensor_from_coefficients(q), e, Tensor2(g), std::nullopt};
  auto qr = membership_report(c);
  CHECK(qr.wedge_structural);
  CHECK(qr.wedge_tensor);
  CHECK_FALSE(qr.momega_structural);
  CHECK_FALSE(qr.momega_tensor);
  CHECK_FALSE(is_in_momega(c));
}

TEST_CASE("every x_{N,h} lies in M_Omega and classifies back") {
  for (int r = 1; r <= 3; ++r) {
    auto g = build_algebra("A", r);
    for (const auto& u : enumerate_reductive(g, RootSubset::empty(g)))
      for (const auto& n : enumerate_reductive(g, u)) {
        auto h = regular_element(n, u);
        REQUIRE(h);
        auto x = build_x(n, *h, u);
        CHECK(is_in_wedge2m_u(x.tensor, u));
        CHECK(is_in_momega(x));
        CHECK(is_skew(x.tensor));
        auto f = diagonal_coefficients(x.tensor, u);
        REQUIRE(f);
        auto res = classify_coefficients(*f, u);
        REQUIRE(std::holds_alternative<Classification>(res));
        const auto& cl = std::get<Classification>(res);
        CHECK(cl.n == n);
        for (auto a : n.ordinals()) CHECK(root_value(*g, a, cl.h) == root_value(*g, a, *h));
        CHECK(build_x(cl.n, cl.h, u).tensor == x.tensor);
      }
  }
}

TEST_CASE("classification examples") {
  auto g = build_algebra("A2");
  auto e = RootSubset::empty(g);
  auto zero = classify_coefficients(CoefficientFunction(g), e);
  REQUIRE(std::holds_alternative<Classification>(zero));
  CHECK(std::get<Classification>(zero).n == e);
  CHECK(std::get<Classification>(zero).h.is_zero());

  CoefficientFunction f(g);
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}}) {
    f.set(oracle::ordinal(*g, i, j), 1);
    f.set(oracle::ordinal(*g, j, i), -1);
  }
  auto res = classify_coefficients(f, e);
  REQUIRE(std::holds_alternative<Rejection>(res));
  CHECK(std::get<Rejection>(res).condition == "reductive");

  CoefficientFunction d(g);
  d.set(0, 1);
  auto rd = classify_coefficients(d, e);
  REQUIRE(std::holds_alternative<Rejection>(rd));
  CHECK(std::get<Rejection>(rd).condition == "d");

  auto u = pm(g, {{1, 2}});
  CoefficientFunction inu(g);
  inu.set(oracle::ordinal(*g, 1, 2), 1);
  auto ru = classify_coefficients(inu, u);
  REQUIRE(std::holds_alternative<Rejection>(ru));
  CHECK(std::get<Rejection>(ru).condition == "domain");
}

TEST_CASE("grid: tensor-level membership iff classification accepts") {
  for (int r = 1; r <= 2; ++r) {
    auto g = build_algebra("A", r);
    int accepted = 0;
    for (const auto& u : enumerate_reductive(g, RootSubset::empty(g))) {
      for (const auto& f : grid(g, u)) {
        RMatrixCandidate c{tensor_from_coefficients(f), u, Tensor2(g), std::nullopt};
        bool in = is_in_momega(c);
        auto res = classify_coefficients(f, u);
        CHECK(in == std::holds_alternative<Classification>(res));
        if (auto* cl = std::get_if<Classification>(&res)) {
          ++accepted;
          CHECK(build_x(cl->n, cl->h, u).tensor == c.tensor);
        }
      }
    }
    CHECK(accepted > 0);
  }
}

TEST_CASE("verdicts do not depend on the scale of the form") {
  auto g = build_algebra("A2");
  AlgebraOptions doubled;
  doubled.form_scale = 2;
  auto g2 = build_algebra("A2", doubled);
  for (const auto& u : enumerate_reductive(g, RootSubset::empty(g))) {
    RootSubset u2(g2, u.ordinals());
    for (const auto& f : grid(g, u)) {
      CoefficientFunction f2(g2);
      for (const auto& [a, v] : f.values()) f2.set(a, v);
      bool v1 = is_in_momega(RMatrixCandidate{tensor_from_coefficients(f), u, Tensor2(g), std::nullopt});
      bool v2 = is_in_momega(RMatrixCandidate{tensor_from_coefficients(f2), u2, Tensor2(g2), std::nullopt});
      CHECK(v1 == v2);
      // The same raw tensor gets the same verdict too.
      Tensor2 raw(g2);
      const Tensor2 base = tensor_from_coefficients(f);
      for (const auto& [k, c] : base.terms()) raw.add(k, c);
      CHECK(is_in_momega(RMatrixCandidate{raw, u2, Tensor2(g2), std::nullopt}) == v1);
    }
    for (const auto& n : enumerate_reductive(g, u)) {
      auto h = *regular_element(n, u);
      RootSubset n2(g2, n.ordinals());
      auto x2 = build_x(n2, h, u2);
      CHECK(is_in_momega(x2));
      // Normalized root vectors: the raw tensor halves under the doubled form.
      CHECK(x2.tensor.terms() == (Rational(1, 2) * build_x(n, h, u).tensor).terms());
    }
  }
}

TEST_CASE("structural and tensor-level tests agree on random tensors") {
  auto g = build_algebra("A2");
  oracle::Gen gen(31);
  for (const auto& u : enumerate_reductive(g, RootSubset::empty(g))) {
    for (int t = 0; t < 25; ++t) {
      Tensor2 x = gen.skew(g, 3);
      CHECK_NOTHROW(is_in_wedge2m_u(x, u));
      // Weight-zero skew tensors with random coefficients.
      CoefficientFunction f(g);
      for (std::size_t a = 0; a < g->num_roots(); ++a)
        if (!u.contains(a) && g->is_positive(a) && gen.coin()) {
          Rational v = gen.rational();
          f.set(a, v);
          f.set(g->negative(a), -v);
        }
      CHECK_NOTHROW(is_in_momega(RMatrixCandidate{tensor_from_coefficients(f), u, Tensor2(g), std::nullopt}));
    }
  }
}

TEST_CASE("distinct (N, h) data give distinct tensors") {
  auto g = build_algebra("A2");
  auto e = RootSubset::empty(g);
  // Key: N together with alpha(h) on N \ U. Equal tensors exactly when keys are equal.
  std::vector<std::pair<std::vector<Rational>, Tensor2>> seen;
  for (const auto& n : enumerate_reductive(g, e))
    for (auto d : {std::vector<Rational>{2, 0, -2}, std::vector<Rational>{3, 1, -4}, std::vector<Rational>{-2, 0, 2}}) {
      auto h = CartanElement::from_diagonal(*g, d);
      if (!is_regular(h, n, e)) continue;
      std::vector<Rational> key(g->num_roots());
      for (auto a : n.ordinals()) key[a] = root_value(*g, a, h);
      Tensor2 t = build_x(n, h, e).tensor;
      for (const auto& [k, s] : seen) CHECK((k == key) == (s == t));
      seen.emplace_back(key, t);
    }
  CHECK(seen.size() > 5);
}

TEST_CASE("nonzero omega is accepted and flagged") {
  auto g = build_algebra("A1");
  Matrix ginv = *inverse(g->gram());
  Tensor2 omega(g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) omega.add({i, j}, ginv(i, j));
  RMatrixCandidate c{Rational(1, 2) * omega, RootSubset::empty(g), omega, std::nullopt};
  auto rep = membership_report(c);
  CHECK(rep.omega_nonzero);
  CHECK(rep.wedge_tensor);
  CHECK_NOTHROW(is_in_momega(c));
}
