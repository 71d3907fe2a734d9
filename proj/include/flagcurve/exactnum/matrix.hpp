#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flagcurve/exactnum/polynomial.hpp"
#include "flagcurve/exactnum/rational.hpp"

namespace flagcurve::exact {

// Row-major dense matrix. Indices are 0-based throughout the library; the
// mathematical 1-based convention only appears in generator and label names.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
    return s;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, const RationalMatrix& a);

Rational determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
// Throws UsageError when m is not invertible.
RationalMatrix inverse(const RationalMatrix& m);

PolyMatrix to_poly(const RationalMatrix& m);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const RationalMatrix& b);
PolyMatrix operator*(const RationalMatrix& a, const PolyMatrix& b);
RationalMatrix evaluate(const PolyMatrix& m, const Rational& t);
PolyMatrix derivative(const PolyMatrix& m);
// Entry-wise p(-t).
PolyMatrix reflected(const PolyMatrix& m);

// Determinant over Q[t]. Bareiss fraction-free elimination above 3x3,
// cofactor expansion at or below.
Polynomial poly_det(const PolyMatrix& m);
// Determinant of the selected rows/columns; UsageError unless the selection is square.
Polynomial poly_det(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

std::string to_string(const RationalMatrix& m);

}  // namespace flagcurve::exact
