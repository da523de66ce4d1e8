#include "braq/matrix.hpp"

#include <stdexcept>

namespace braq {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("RatMatrix: dimension mismatch in product");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a == 0) continue;  // operands are often permutation-sparse
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& b = rhs.at(k, c);
        if (b == 0) continue;
        out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::kronecker(const RatMatrix& rhs) const {
  RatMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = at(r, c);
      if (a == 0) continue;
      for (std::size_t r2 = 0; r2 < rhs.rows_; ++r2)
        for (std::size_t c2 = 0; c2 < rhs.cols_; ++c2)
          out.at(r * rhs.rows_ + r2, c * rhs.cols_ + c2) = a * rhs.at(r2, c2);
    }
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Rational RatMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("RatMatrix: determinant of non-square matrix");
  RatMatrix a = *this;
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c)
        std::swap(a.at(pivot, c), a.at(col, c));
      det = -det;
    }
    det *= a.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      Rational factor = a.at(r, col) / a.at(col, col);
      for (std::size_t c = col; c < n; ++c)
        a.at(r, c) -= factor * a.at(col, c);
    }
  }
  return det;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("RatMatrix: inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    Rational d = a.at(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a.at(col, c) /= d;
      inv.at(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rational factor = a.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a.at(r, c) -= factor * a.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

int RatMatrix::compare(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_) return rows_ < rhs.rows_ ? -1 : 1;
  if (cols_ != rhs.cols_) return cols_ < rhs.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    int c = cmp(data_[i], rhs.data_[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace braq
