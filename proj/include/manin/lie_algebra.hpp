#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "manin/linalg.hpp"
#include "manin/rational.hpp"

namespace manin {

/// A root as an integer vector in the ambient coordinates of the realization.
/// For A_{n-1} these are the coordinates of e_i - e_j acting on diagonal entries.
struct Root {
  std::vector<int> coords;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Sparse element of g, keyed by basis index. Zero coefficients are never stored.
class LieElement {
 public:
  using Map = std::map<std::size_t, Rational>;

  LieElement() = default;
  static LieElement basis(std::size_t index, const Rational& coeff = 1);

  Rational coeff(std::size_t index) const;
  void add(std::size_t index, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rational& s);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  Map terms_;
};

/// Finite-dimensional Lie algebra given by a faithful matrix realization.
///
/// The basis is ordered Cartan generators first, then one root vector per root in the
/// fixed root order. Bracket table and Gram matrix are derived from the matrices, so
/// the class does not depend on the series it was built for.
class LieAlgebra {
 public:
  struct Realization {
    std::string id;
    std::string series;
    int rank = 0;
    std::vector<Matrix> basis;
    std::size_t cartan_dim = 0;
    std::vector<Root> roots;         ///< roots[k] is the weight of basis[cartan_dim + k]
    std::vector<Root> simple_roots;
    Rational form_scale = 1;         ///< form = form_scale * trace(xy)
  };

  struct Term {
    std::size_t index;
    Rational coeff;
  };

  explicit LieAlgebra(Realization r);

  const std::string& id() const { return id_; }
  const std::string& series() const { return series_; }
  int rank() const { return rank_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t cartan_dim() const { return cartan_dim_; }
  std::size_t matrix_size() const { return matrix_size_; }
  const Rational& form_scale() const { return form_scale_; }

  // Roots, addressed by ordinal in the fixed root order.
  std::size_t num_roots() const { return roots_.size(); }
  const Root& root(std::size_t ordinal) const { return roots_.at(ordinal); }
  const std::vector<Root>& roots() const { return roots_; }
  std::optional<std::size_t> ordinal_of(const Root& r) const;
  std::size_t negative(std::size_t ordinal) const { return negatives_.at(ordinal); }
  std::optional<std::size_t> root_sum(std::size_t a, std::size_t b) const;
  bool is_positive(std::size_t ordinal) const { return positive_.at(ordinal); }
  std::size_t root_index(std::size_t ordinal) const { return cartan_dim_ + ordinal; }
  std::optional<std::size_t> root_at_index(std::size_t basis_index) const;
  bool is_cartan_index(std::size_t basis_index) const { return basis_index < cartan_dim_; }
  /// Values alpha(H_k) for the Cartan basis H_k.
  const Vector& root_functional(std::size_t ordinal) const { return functionals_.at(ordinal); }
  std::vector<int> simple_coords(const Root& r) const;
  /// Throws DomainError when the coordinates do not describe a root.
  std::size_t ordinal_from_simple(const std::vector<int>& coords) const;

  // Structure.
  std::span<const Term> bracket_terms(std::size_t i, std::size_t j) const;
  const Matrix& gram() const { return gram_; }
  const Matrix& basis_matrix(std::size_t i) const { return basis_.at(i); }

  LieElement bracket(const LieElement& x, const LieElement& y) const;
  Rational form(const LieElement& x, const LieElement& y) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Rational form(const Vector& x, const Vector& y) const;

  Matrix to_matrix(const LieElement& x) const;
  /// Coordinates of a matrix in the basis; DomainError if it lies outside g.
  LieElement from_matrix(const Matrix& m) const;

  Vector to_dense(const LieElement& x) const;
  LieElement from_dense(std::span<const Rational> v) const;

  /// StructuralError unless every index of x is a valid basis index.
  void check(const LieElement& x) const;
  void check(const Vector& x) const;

 private:
  std::string id_;
  std::string series_;
  int rank_;
  std::size_t cartan_dim_;
  std::size_t matrix_size_;
  Rational form_scale_;
  std::vector<Matrix> basis_;
  std::vector<Root> roots_;
  std::vector<Root> simple_roots_;
  std::map<Root, std::size_t> ordinal_;
  std::vector<std::size_t> negatives_;
  std::vector<bool> positive_;
  std::vector<Vector> functionals_;
  std::vector<std::vector<Term>> table_;   // dim * dim
  Matrix gram_;
  // Coordinate extraction: dim matrix entries whose submatrix is invertible.
  std::vector<std::size_t> probe_entries_;
  Matrix probe_inverse_;
  std::vector<std::vector<int>> simple_coords_;
};

using Algebra = std::shared_ptr<const LieAlgebra>;

struct AlgebraOptions {
  Rational form_scale = 1;
  int max_rank = 6;
};

/// sl(rank+1) in matrix realization. Only series "A" is supported.
Algebra build_algebra(std::string_view series, int rank, const AlgebraOptions& options = {});
/// Parses identifiers such as "A2".
Algebra build_algebra(std::string_view id, const AlgebraOptions& options = {});

/// True when both algebras describe the same ambient (same object, or same id and form).
bool same_ambient(const LieAlgebra& a, const LieAlgebra& b);

LieElement bracket(const LieAlgebra& g, const LieElement& x, const LieElement& y);
Rational form(const LieAlgebra& g, const LieElement& x, const LieElement& y);

/// c with [E_alpha, E_beta] = c E_{alpha+beta}. DomainError when alpha+beta is not a root.
Rational structure_constant(const LieAlgebra& g, std::size_t alpha, std::size_t beta);

/// Basis index of the matrix unit E_ij (0-based, i != j) in a type-A realization.
std::size_t matrix_unit_index(const LieAlgebra& g, std::size_t i, std::size_t j);

}  // namespace manin
