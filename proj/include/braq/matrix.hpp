#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace braq {

using Rational = mpq_class;

/// Dense matrix with exact rational entries. Row-major storage.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  bool is_symmetric() const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix kronecker(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& s) const;
  RatMatrix transposed() const;

  Rational determinant() const;
  std::optional<RatMatrix> inverse() const;

  bool operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }
  bool operator!=(const RatMatrix& rhs) const { return !(*this == rhs); }

  /// Total order (dims, then entries lexicographically); matrices act as
  /// map keys elsewhere.
  int compare(const RatMatrix& rhs) const;
  bool operator<(const RatMatrix& rhs) const { return compare(rhs) < 0; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace braq
