#pragma once

#include <string>
#include <vector>

#include "manin/subspace.hpp"
#include "manin/tensor.hpp"

namespace manin {

/// g = u (+) v with u and v subalgebras.
struct Decomposition {
  Subspace u;
  Subspace v;
};

/// PreconditionError unless u and v are subalgebras forming a direct sum of g.
Decomposition make_decomposition(const LieAlgebra& g, Subspace u, Subspace v);

struct PreconditionVerdict {
  bool omega_split = false;   ///< r0 + r0^21 in (u (x) u) (+) (v (x) v)
  bool u_invariant = false;   ///< r0 is ad(u)-invariant
  bool cyb_vvv_zero = false;  ///< v (x) v (x) v component of CYB(r0) vanishes
  bool all() const { return omega_split && u_invariant && cyb_vvv_zero; }
};

PreconditionVerdict check_preconditions(const Tensor2& r0, const Decomposition& d);

/// Component of r0 in v (x) v along g (x) u + u (x) g, without any checks.
Tensor2 v_component(const Tensor2& r0, const Decomposition& d);

/// v_component after check_preconditions (PreconditionError naming the failed one);
/// InvariantFailure if the result does not solve the CYBE.
Tensor2 project_to_v(const Tensor2& r0, const Decomposition& d);

/// Which D_i enters the closed form: the printed diag(1/n, .., -(n-1)/n, .., 1/n) or its negative.
enum class DiagonalSign { printed, negated };

/// sum_{i<j<n} (E_ij - D_i)^(E_ji - D_j)/(h_i - h_j) + sum_{i<n} D_i ^ (sum_{k != i} E_ki)/(h_i - h_n).
Tensor2 closed_form_v(const Algebra& g, const std::vector<Rational>& hvals, DiagonalSign sign = DiagonalSign::printed);

struct ExampleInstance {
  int n = 0;
  std::vector<Rational> hvals;
  Algebra g;
  Subspace p;            ///< parabolic: last column zero above the corner
  Subspace p_complement; ///< span of E_in, i < n
  Matrix conjugator;     ///< id - E_1n - ... - E_{n-1,n}
  Decomposition d;       ///< u = Cartan, v = conjugator p conjugator^{-1}
  Tensor2 r0;            ///< sum_{i<j} 1/(h_i - h_j) E_ij ^ E_ji
  Tensor2 expected_v;    ///< closed_form_v with the printed D_i
};

/// PreconditionError unless n >= 3, hvals has n pairwise distinct entries summing to 0.
ExampleInstance build_example(int n, const std::vector<Rational>& hvals);

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExampleReport {
  std::vector<ExampleCheck> checks;
  Tensor2 projected;     ///< p(r0) in v (x) v
  Tensor2 pipeline_v;    ///< conjugator^{-1} p(r0) conjugator
  Tensor2 residual;      ///< pipeline_v - expected_v
  // Diagnostic against the closed form with negated D_i.
  bool negated_matches = false;
  bool negated_cyb_zero = false;

  bool pass() const;
};

ExampleReport verify_example(const ExampleInstance& e);

}  // namespace manin
