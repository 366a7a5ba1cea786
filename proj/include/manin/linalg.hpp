#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "manin/rational.hpp"

namespace manin {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Rational.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Every row must have length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Matrix transpose(const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);
Matrix commutator(const Matrix& a, const Matrix& b);
Rational trace(const Matrix& a);

struct Echelon {
  Matrix reduced;                    ///< nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each row, strictly increasing
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : a x = 0}; one vector per free column, with that free variable set to 1.
std::vector<Vector> nullspace(const Matrix& a);

/// A solution of a x = b with every free variable set to zero, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& a);

bool is_zero(std::span<const Rational> v);

}  // namespace manin
