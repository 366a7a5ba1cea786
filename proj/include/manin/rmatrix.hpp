#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "manin/reductive.hpp"
#include "manin/tensor.hpp"

namespace manin {

struct Provenance {
  RootSubset n;
  CartanElement h;
};

struct RMatrixCandidate {
  Tensor2 tensor;
  RootSubset u;
  Tensor2 omega;  ///< symmetric invariant part; zero in the triangular case
  std::optional<Provenance> provenance;
};

/// alpha -> x_alpha on R \ U, with x = sum x_alpha E_alpha (x) E_{-alpha} for root vectors
/// normalized by <E_alpha, E_{-alpha}> = 1. Absent keys are zero.
class CoefficientFunction {
 public:
  CoefficientFunction() = default;
  explicit CoefficientFunction(Algebra g) : g_(std::move(g)) {}

  const Algebra& algebra() const { return g_; }
  void set(std::size_t ordinal, const Rational& value);
  Rational at(std::size_t ordinal) const;
  const std::map<std::size_t, Rational>& values() const { return values_; }

  friend bool operator==(const CoefficientFunction& a, const CoefficientFunction& b) { return a.values_ == b.values_; }

 private:
  Algebra g_;
  std::map<std::size_t, Rational> values_;
};

/// x_{N,h} = sum over N \ U of 1/alpha(h) E_alpha (x) E_{-alpha}.
/// PreconditionError unless U <= N are reductive; DomainError naming the root when h is not regular.
RMatrixCandidate build_x(const RootSubset& n, const CartanElement& h, const RootSubset& u);

/// The tensor sum x_alpha E_alpha (x) E_{-alpha}.
Tensor2 tensor_from_coefficients(const CoefficientFunction& f);
/// x_alpha when t is supported on the pairs E_alpha (x) E_{-alpha}, alpha outside U; nullopt otherwise.
std::optional<CoefficientFunction> diagonal_coefficients(const Tensor2& t, const RootSubset& u);

/// Outcome of both membership oracles; they must agree whenever omega is zero.
struct MembershipReport {
  bool diagonal_form = false;
  bool wedge_structural = false;  ///< diagonal form with (d) and (e)
  bool wedge_tensor = false;      ///< skew, supported on m (x) m, u-invariant
  bool momega_structural = false; ///< additionally the quadratic condition (f)
  bool momega_tensor = false;     ///< additionally cyb projected to m(x)m(x)m vanishes
  bool omega_nonzero = false;     ///< flagged: the quotient reading is only pinned for omega = 0
  std::vector<std::string> failures;

  bool in_wedge2m_u() const { return wedge_tensor; }
  bool in_momega() const { return momega_tensor; }
  bool agree() const { return wedge_structural == wedge_tensor && momega_structural == momega_tensor; }
};

MembershipReport membership_report(const RMatrixCandidate& c);
/// Both throw InvariantFailure if the structural and tensor-level tests disagree.
bool is_in_wedge2m_u(const Tensor2& t, const RootSubset& u);
bool is_in_momega(const RMatrixCandidate& c);

struct Classification {
  RootSubset n;
  CartanElement h;
};

struct Rejection {
  std::string condition;             ///< "domain", "d", "reductive", "e", "f"
  std::vector<std::size_t> witnesses;
  std::string message;
};

using ClassifyResult = std::variant<Classification, Rejection>;

/// Recovers (N, h) with x_alpha = 1/alpha(h) on N \ U, or names the first violated condition.
ClassifyResult classify_coefficients(const CoefficientFunction& f, const RootSubset& u);

}  // namespace manin
