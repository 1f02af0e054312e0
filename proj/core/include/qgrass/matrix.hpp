#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qgrass/field.hpp"

namespace qgrass {

/// Dense row-major matrix of exact scalars. Matrices act on column vectors.
/// Zero-sized shapes (0 x n, n x 0) are legal and common.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> col(std::size_t c) const;

  Matrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;                    ///< zero rows removed
  std::vector<std::size_t> pivots;   ///< strictly increasing
};

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b);
Matrix add(const Field& k, const Matrix& a, const Matrix& b);
/// Entries reduced into the field's canonical representatives.
Matrix normalized(const Field& k, const Matrix& a);
/// Rows of `top` followed by rows of `bottom`; column counts must agree.
Matrix stack_rows(const Matrix& top, const Matrix& bottom);

Echelon rref(const Field& k, Matrix a);
std::size_t rank(const Field& k, const Matrix& a);
/// Basis of {v : a v = 0}, one column vector per basis element (as the
/// columns of the returned cols x nullity matrix).
Matrix kernel(const Field& k, const Matrix& a);
/// True when `m` is in reduced row echelon form with no zero rows.
bool is_rref_full_rank(const Field& k, const Matrix& m);

}  // namespace qgrass
