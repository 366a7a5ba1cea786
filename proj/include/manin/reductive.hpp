#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "manin/lie_algebra.hpp"
#include "manin/subspace.hpp"

namespace manin {

/// Set of roots of one algebra, kept sorted by the fixed root order.
class RootSubset {
 public:
  RootSubset() = default;
  RootSubset(Algebra g, std::vector<std::size_t> ordinals);
  static RootSubset empty(Algebra g);
  static RootSubset all(Algebra g);

  const Algebra& algebra() const { return g_; }
  const LieAlgebra& g() const { return *g_; }
  const std::vector<std::size_t>& ordinals() const { return ordinals_; }
  std::size_t size() const { return ordinals_.size(); }
  bool empty() const { return ordinals_.empty(); }
  bool contains(std::size_t ordinal) const { return ordinal < mask_.size() && mask_[ordinal]; }
  bool includes(const RootSubset& other) const;

  /// Adds -alpha for every member alpha.
  RootSubset symmetrized() const;
  RootSubset minus(const RootSubset& other) const;

  friend bool operator==(const RootSubset& a, const RootSubset& b) { return a.ordinals_ == b.ordinals_; }
  /// Orders by size, then lexicographically by ordinals.
  friend std::strong_ordering operator<=>(const RootSubset& a, const RootSubset& b);

 private:
  Algebra g_;
  std::vector<std::size_t> ordinals_;
  std::vector<bool> mask_;
};

/// Element of the Cartan subalgebra; every non-Cartan coordinate is zero.
class CartanElement {
 public:
  CartanElement() = default;
  /// DomainError if x has a component outside the Cartan subalgebra.
  CartanElement(const LieAlgebra& g, LieElement x);
  static CartanElement from_coords(const LieAlgebra& g, const Vector& coords);
  /// Type A: the traceless diagonal matrix diag(d_1, ..., d_n).
  static CartanElement from_diagonal(const LieAlgebra& g, const std::vector<Rational>& diagonal);

  const LieElement& value() const { return value_; }
  Vector coords(const LieAlgebra& g) const;
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const CartanElement&, const CartanElement&) = default;

 private:
  LieElement value_;
};

/// Simple-root coordinates, e.g. "[1,1]".
std::string root_label(const LieAlgebra& g, std::size_t ordinal);
std::string subset_label(const RootSubset& s);

/// alpha(h), read off from [h, E_alpha] = alpha(h) E_alpha.
Rational root_value(const LieAlgebra& g, std::size_t ordinal, const CartanElement& h);

/// -S = S and (S + S) /\ R within S.
bool is_reductive(const RootSubset& s);

/// All reductive N with contains <= N <= R, ordered by size then ordinals.
/// PreconditionError when `contains` is not reductive.
std::vector<RootSubset> enumerate_reductive(const Algebra& g, const RootSubset& contains);

bool is_regular(const CartanElement& h, const RootSubset& n, const RootSubset& u);
/// PreconditionError unless U <= N are reductive; DomainError naming the first root where
/// h fails to be (N, U)-regular.
void require_regular(const CartanElement& h, const RootSubset& n, const RootSubset& u);

/// Deterministic (N, U)-regular element, or nullopt when some root of N \ U vanishes on
/// the whole solution space of alpha(h) = 0, alpha in U.
std::optional<CartanElement> regular_element(const RootSubset& n, const RootSubset& u);

/// h (+) sum of g_alpha over the subset, for any subset.
Subspace root_subspace(const RootSubset& s);
/// u = h (+) sum_{alpha in U} g_alpha. PreconditionError unless U is reductive.
Subspace subalgebra_from_subset(const RootSubset& u);
/// m = sum_{alpha in R \ U} g_alpha. PreconditionError unless U is reductive.
Subspace complement_from_subset(const RootSubset& u);

}  // namespace manin
