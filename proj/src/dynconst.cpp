#include "manin/dynconst.hpp"

#include <algorithm>

#include "manin/error.hpp"

namespace manin {

Decomposition make_decomposition(const LieAlgebra& g, Subspace u, Subspace v) {
  if (!is_subalgebra(g, u)) throw PreconditionError("u is not a subalgebra");
  if (!is_subalgebra(g, v)) throw PreconditionError("v is not a subalgebra");
  if (!is_direct_sum_of_ambient(u, v)) throw PreconditionError("g is not the direct sum of u and v");
  return {std::move(u), std::move(v)};
}

PreconditionVerdict check_preconditions(const Tensor2& r0, const Decomposition& d) {
  PreconditionVerdict out;
  Projection to_u(d.u, d.v), to_v(d.v, d.u);
  Tensor2 omega = r0 + flip(r0);
  out.omega_split = project_legs(omega, to_u, to_v).is_zero() && project_legs(omega, to_v, to_u).is_zero();
  out.u_invariant = is_invariant(r0, d.u);
  out.cyb_vvv_zero = project_legs(cyb(r0), to_v).is_zero();
  return out;
}

Tensor2 v_component(const Tensor2& r0, const Decomposition& d) { return project_legs(r0, Projection(d.v, d.u)); }

Tensor2 project_to_v(const Tensor2& r0, const Decomposition& d) {
  auto pre = check_preconditions(r0, d);
  if (!pre.omega_split) throw PreconditionError("r0 + r0^21 is not in (u (x) u) (+) (v (x) v)");
  if (!pre.u_invariant) throw PreconditionError("r0 is not u-invariant");
  if (!pre.cyb_vvv_zero) throw PreconditionError("CYB(r0) has a nonzero v (x) v (x) v component");
  Tensor2 v = v_component(r0, d);
  if (!cyb(v).is_zero()) throw InvariantFailure("projected tensor does not solve the CYBE");
  return v;
}

namespace {

LieElement unit(const LieAlgebra& g, std::size_t i, std::size_t j) { return LieElement::basis(matrix_unit_index(g, i, j)); }

// D_i = I/n - E_ii (printed) or E_ii - I/n, as an element of the Cartan subalgebra.
LieElement diagonal_d(const LieAlgebra& g, std::size_t i, DiagonalSign sign) {
  const std::size_t n = g.matrix_size();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Rational(1, static_cast<long>(n));
  m(i, i) -= 1;
  LieElement d = g.from_matrix(m);
  return sign == DiagonalSign::printed ? d : -d;
}

}  // namespace

Tensor2 closed_form_v(const Algebra& g, const std::vector<Rational>& hvals, DiagonalSign sign) {
  const std::size_t n = g->matrix_size();
  if (hvals.size() != n) throw StructuralError("need one h value per matrix row");
  Tensor2 v(g);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      v += (1 / (hvals[i] - hvals[j])) *
           wedge(g, unit(*g, i, j) - diagonal_d(*g, i, sign), unit(*g, j, i) - diagonal_d(*g, j, sign));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    LieElement column;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) column += unit(*g, k, i);
    v += (1 / (hvals[i] - hvals[n - 1])) * wedge(g, diagonal_d(*g, i, sign), column);
  }
  return v;
}

ExampleInstance build_example(int n, const std::vector<Rational>& hvals) {
  if (n < 3) throw PreconditionError("example needs n >= 3");
  if (hvals.size() != static_cast<std::size_t>(n)) throw PreconditionError("need exactly n values h_i");
  Rational total;
  for (std::size_t i = 0; i < hvals.size(); ++i) {
    total += hvals[i];
    for (std::size_t j = i + 1; j < hvals.size(); ++j)
      if (hvals[i] == hvals[j]) throw PreconditionError("h values must be pairwise distinct");
  }
  if (sgn(total) != 0) throw PreconditionError("h values must sum to 0");

  AlgebraOptions opt;
  opt.max_rank = std::max(opt.max_rank, n - 1);
  ExampleInstance e;
  e.n = n;
  e.hvals = hvals;
  e.g = build_algebra("A", n - 1, opt);
  const LieAlgebra& g = *e.g;
  const std::size_t last = static_cast<std::size_t>(n) - 1;

  std::vector<LieElement> pb, qb;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (auto a = g.root_at_index(i)) {
      const auto& c = g.root(*a).coords;  // e_row - e_col
      std::size_t row = 0, col = 0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 1) row = k;
        if (c[k] == -1) col = k;
      }
      if (col == last && row != last) {
        qb.push_back(LieElement::basis(i));
        continue;
      }
    }
    pb.push_back(LieElement::basis(i));
  }
  e.p = span(g, pb);
  e.p_complement = span(g, qb);

  e.conjugator = Matrix::identity(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < last; ++i) e.conjugator(i, last) = -1;
  Matrix inv = *inverse(e.conjugator);
  std::vector<LieElement> vb;
  for (const auto& x : pb) vb.push_back(g.from_matrix(e.conjugator * g.to_matrix(x) * inv));
  std::vector<LieElement> hb;
  for (std::size_t i = 0; i < g.cartan_dim(); ++i) hb.push_back(LieElement::basis(i));
  Subspace h = span(g, hb), v = span(g, vb);
  if (!is_direct_sum_of_ambient(h, v)) throw InvariantFailure("Cartan subalgebra and the conjugated parabolic do not span g");
  e.d = make_decomposition(g, h, v);

  e.r0 = Tensor2(e.g);
  for (std::size_t i = 0; i < last + 1; ++i)
    for (std::size_t j = i + 1; j < last + 1; ++j)
      e.r0 += (1 / (hvals[i] - hvals[j])) * wedge(e.g, unit(g, i, j), unit(g, j, i));
  e.expected_v = closed_form_v(e.g, hvals, DiagonalSign::printed);
  return e;
}

bool ExampleReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.pass; });
}

ExampleReport verify_example(const ExampleInstance& e) {
  ExampleReport rep;
  auto pre = check_preconditions(e.r0, e.d);
  rep.checks.push_back({"preconditions", pre.all(),
                        std::string("omega split ") + (pre.omega_split ? "yes" : "no") + ", u-invariant " +
                            (pre.u_invariant ? "yes" : "no") + ", CYB v(x)v(x)v component zero " +
                            (pre.cyb_vvv_zero ? "yes" : "no")});

  bool projected = false;
  try {
    rep.projected = project_to_v(e.r0, e.d);
    projected = true;
    rep.checks.push_back({"projection solves CYBE", true, "CYB(p(r0)) = 0"});
  } catch (const Error& err) {
    rep.projected = v_component(e.r0, e.d);
    rep.checks.push_back({"projection solves CYBE", false, err.what()});
  }

  rep.pipeline_v = conjugate(rep.projected, e.conjugator, Conjugation::inverse);
  bool in_pp = projected && project_legs(rep.pipeline_v, Projection(e.p, e.p_complement)) == rep.pipeline_v &&
               cyb(rep.pipeline_v).is_zero();
  rep.checks.push_back({"conjugated back into p (x) p", in_pp,
                        in_pp ? "g^-1 p(r0) g lies in p (x) p and solves CYBE" : "conjugated tensor leaves p (x) p or fails CYBE"});

  rep.residual = rep.pipeline_v - e.expected_v;
  rep.checks.push_back({"matches closed form", rep.residual.is_zero(),
                        rep.residual.is_zero() ? "coefficient-for-coefficient equal"
                                               : std::to_string(rep.residual.size()) + " coefficients differ"});

  Tensor3 c = cyb(e.expected_v);
  rep.checks.push_back({"closed form solves CYBE", c.is_zero(),
                        c.is_zero() ? "CYB = 0" : std::to_string(c.size()) + " nonzero CYB coefficients"});

  Tensor2 corrected = closed_form_v(e.g, e.hvals, DiagonalSign::negated);
  rep.negated_matches = corrected == rep.pipeline_v;
  rep.negated_cyb_zero = cyb(corrected).is_zero();
  return rep;
}

}  // namespace manin
