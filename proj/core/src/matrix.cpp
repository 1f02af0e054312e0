#include "qgrass/matrix.hpp"

#include "qgrass/error.hpp"

namespace qgrass {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> Matrix::col(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(l, j) != 0) out(i, j) = k.add(out(i, j), k.mul(x, b(l, j)));
    }
  return out;
}

Matrix add(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.add(a(i, j), b(i, j));
  return out;
}

Matrix normalized(const Field& k, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.normalize(a(i, j));
  return out;
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DomainError("row stacking with different column counts");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

Echelon rref(const Field& k, Matrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < n && lead < m; ++c) {
    std::size_t sel = lead;
    while (sel < m && a(sel, c) == 0) ++sel;
    if (sel == m) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(lead, j));
    const Rational inv = k.inv(a(lead, c));
    for (std::size_t j = c; j < n; ++j) a(lead, j) = k.mul(a(lead, j), inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) = k.sub(a(r, j), k.mul(f, a(lead, j)));
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(lead, n);
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t j = 0; j < n; ++j) reduced(r, j) = a(r, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Field& k, const Matrix& a) { return rref(k, a).pivots.size(); }

Matrix kernel(const Field& k, const Matrix& a) {
  const Echelon e = rref(k, a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(n, n - e.pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], out) = k.neg(e.reduced(r, free));
    ++out;
  }
  return basis;
}

bool is_rref_full_rank(const Field& k, const Matrix& m) {
  const Echelon e = rref(k, m);
  return e.pivots.size() == m.rows() && e.reduced == m;
}

}  // namespace qgrass
