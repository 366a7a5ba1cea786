#include "manin/linalg.hpp"

#include <algorithm>
#include <utility>

#include "manin/error.hpp"

namespace manin {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw StructuralError("row length does not match column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto v = row(r);
  return {v.begin(), v.end()};
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix sum dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix difference dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw StructuralError("matrix-vector dimension mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(x[j]) != 0 && sgn(a(i, j)) != 0) y[i] += a(i, j) * x[j];
  return y;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational trace(const Matrix& a) {
  if (a.rows() != a.cols()) throw StructuralError("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Echelon rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i) std::copy(m.row(i).begin(), m.row(i).end(), reduced.row(i).begin());
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw StructuralError("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw StructuralError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Matrix{};
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace manin
