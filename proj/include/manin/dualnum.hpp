#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "manin/reductive.hpp"
#include "manin/rmatrix.hpp"
#include "manin/subspace.hpp"
#include "manin/tensor.hpp"

namespace manin {

/// a + b eps in g[eps].
struct DualElement {
  LieElement a;
  LieElement b;

  friend bool operator==(const DualElement&, const DualElement&) = default;
};

/// <a + b eps, c + d eps> = <a, d> + <b, c>.
Rational dual_form(const LieAlgebra& g, const DualElement& x, const DualElement& y);
/// [a + b eps, c + d eps] = [a, c] + ([a, d] + [b, c]) eps.
DualElement dual_bracket(const LieAlgebra& g, const DualElement& x, const DualElement& y);

/// Subspace of g[eps] in coordinates (g-part, eps-part), RREF canonical.
class DualSubspace {
 public:
  DualSubspace() = default;
  DualSubspace(Algebra g, Subspace s);
  static DualSubspace span(const Algebra& g, const std::vector<DualElement>& elements);

  const Algebra& algebra() const { return g_; }
  const LieAlgebra& g() const { return *g_; }
  const Subspace& subspace() const { return s_; }
  std::size_t dim() const { return s_.dim(); }
  std::vector<DualElement> basis() const;
  bool contains(const DualElement& x) const;

  /// Projection onto g along g eps.
  Subspace g_projection() const;
  /// l /\ g.
  Subspace g_part() const;
  /// {b : b eps in l}.
  Subspace eps_part() const;

  friend bool operator==(const DualSubspace& a, const DualSubspace& b) { return a.s_ == b.s_; }

 private:
  Algebra g_;
  Subspace s_;
};

Vector to_dense(const LieAlgebra& g, const DualElement& x);
DualElement dual_from_dense(const LieAlgebra& g, std::span<const Rational> v);

struct LagrangianVerdict {
  bool isotropic = false;
  bool dimension_ok = false;
  bool subalgebra = false;
  bool all() const { return isotropic && dimension_ok && subalgebra; }
};

LagrangianVerdict is_lagrangian_subalgebra(const DualSubspace& l);

/// (n, B): B is the Gram matrix of a skew 2-cocycle on the recorded ordered basis of n.
class SubalgebraPair {
 public:
  SubalgebraPair() = default;
  /// PreconditionError unless the basis is independent, spans a subalgebra, and B is a skew 2-cocycle.
  SubalgebraPair(Algebra g, std::vector<LieElement> basis, Matrix b);

  const Algebra& algebra() const { return g_; }
  const LieAlgebra& g() const { return *g_; }
  const std::vector<LieElement>& basis() const { return basis_; }
  const Matrix& b() const { return b_; }
  const Subspace& n() const { return n_; }

  /// B(x, y) for x, y in n; DomainError otherwise.
  Rational eval(const LieElement& x, const LieElement& y) const;
  /// Ker B as a subspace of g.
  Subspace kernel() const;
  /// The same pair re-expressed on the RREF basis of n.
  SubalgebraPair canonical() const;

  friend bool operator==(const SubalgebraPair& p, const SubalgebraPair& q);

 private:
  Vector coords(const LieElement& x) const;

  Algebra g_;
  std::vector<LieElement> basis_;
  Matrix b_;
  Subspace n_;
};

/// B(x, y) = <h, [x, y]> on the given basis.
SubalgebraPair coboundary_pair(const Algebra& g, std::vector<LieElement> basis, const LieElement& h);

/// l(n, B) = {a + b eps : a in n, <b, y> = B(a, y) for y in n} (+) n^perp eps.
DualSubspace pair_to_lagrangian(const SubalgebraPair& p);
/// Inverse of pair_to_lagrangian; the pair is expressed on the RREF basis of n.
/// PreconditionError unless l is a Lagrangian subalgebra.
SubalgebraPair lagrangian_to_pair(const DualSubspace& l);

struct PairClassification {
  RootSubset n;
  CartanElement h;  ///< orthogonal to the centre z(n)
};

using PairClassifyResult = std::variant<PairClassification, Rejection>;

/// Decides whether (n, B) has n = h (+) sum over N of g_alpha with N reductive, N >= U,
/// B the coboundary of an (N, U)-regular h and Ker B = u. PreconditionError unless n contains h.
PairClassifyResult classify_pair(const SubalgebraPair& p, const RootSubset& u);

/// u (+) sum_{R \ N} eps g_alpha (+) sum_{N \ U} (1 + sign alpha(h) eps) g_alpha.
DualSubspace build_lnb(const RootSubset& n, const CartanElement& h, const RootSubset& u, int sign);

/// u + {(c (x) 1)(b) + c eps : c in m}. DomainError unless b is skew and supported on m (x) m.
DualSubspace lagrangian_from_bivector(const RootSubset& u, const Tensor2& b);
bool is_poisson_homogeneous(const RootSubset& u, const Tensor2& b);

}  // namespace manin
