#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "manin/lie_algebra.hpp"
#include "manin/linalg.hpp"

namespace manin {

/// Subspace of Q^n stored as the nonzero rows of its reduced row echelon form.
/// Two subspaces are equal iff their stored matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.rows(); }
  const Matrix& rref() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis() const { return rows_.row_vectors(); }

  bool contains(const Vector& v) const;
  /// Coefficients of v in the stored basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const LieAlgebra& g, const std::vector<LieElement>& elements);
bool equal(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);
/// Orthogonal complement with respect to the invariant form of g.
Subspace perp(const LieAlgebra& g, const Subspace& s);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_direct_sum_of_ambient(const Subspace& s, const Subspace& t);
/// True when [u, s] is contained in s.
bool is_stable_under(const LieAlgebra& g, const Subspace& s, const Subspace& u);

/// Linear projection onto `image` along `kernel`, for image (+) kernel = Q^n.
class Projection {
 public:
  /// DomainError unless image and kernel form a direct sum of the ambient space.
  Projection(const Subspace& image, const Subspace& kernel);

  std::size_t ambient() const { return matrix_.rows(); }
  /// Image of the i-th standard basis vector.
  const Vector& column(std::size_t i) const { return columns_.at(i); }
  Vector apply(const Vector& v) const { return matrix_ * v; }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;  // acts on column vectors
  std::vector<Vector> columns_;
};

}  // namespace manin
