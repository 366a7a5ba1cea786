#pragma once

#include <vector>

#include "manin/dualnum.hpp"
#include "manin/error.hpp"
#include "manin/tensor.hpp"

namespace manin {

/// delta(e_i) for every basis vector e_i.
struct Cobracket {
  Algebra g;
  std::vector<Tensor2> images;

  Tensor2 apply(const LieElement& x) const;
};

/// delta(a) = [a (x) 1 + 1 (x) a, rho]. PreconditionError unless rho + rho^21 is g-invariant.
Cobracket cobracket_from_r(const Tensor2& rho);
/// delta([x, y]) = x.delta(y) - y.delta(x) on all basis pairs.
bool is_cocycle(const Cobracket& d);
/// Every delta(e_i) is skew.
bool is_skew(const Cobracket& d);

/// (delta (x) id)(s) = sum s_ij delta(e_i) (x) e_j.
Tensor3 delta_tensor_id(const Cobracket& d, const Tensor2& s);

struct TwistCheck {
  bool holds = false;
  Tensor3 residual;  ///< zero exactly when the condition holds
};

/// CYB(s) - Alt(delta (x) id)(s). DomainError unless s is skew.
TwistCheck twist_condition_general(const Cobracket& d, const Tensor2& s);
/// CYB(s) + [[rho, s]] + [[s, rho]]. DomainError unless s is skew.
TwistCheck twist_condition_triangular(const Tensor2& rho, const Tensor2& s);

class TwistConditionError : public DomainError {
 public:
  TwistConditionError(const std::string& what, Tensor3 residual) : DomainError(what), residual_(std::move(residual)) {}
  const Tensor3& residual() const { return residual_; }

 private:
  Tensor3 residual_;
};

struct TwistResult {
  Tensor2 twisted;         ///< rho + s
  bool rho_solves = false; ///< CYB(rho) = 0
  bool twisted_solves = false;
};

/// rho + s, after checking the triangular twist condition (TwistConditionError otherwise).
/// When CYB(rho) = 0 the twisted tensor must solve the CYBE as well; InvariantFailure if not.
TwistResult apply_twist(const Tensor2& rho, const Tensor2& s);

/// Graph {S(c) + c eps : c in g} of S(c) = (c (x) 1)(s). DomainError unless s is skew.
DualSubspace s_graph(const Tensor2& s);

}  // namespace manin
