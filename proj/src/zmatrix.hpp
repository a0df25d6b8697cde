#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace gkt {

using Int = mpz_class;

/// Dense matrix over Z with arbitrary-precision entries, row-major storage.
/// Empty shapes (0 x n, n x 0) are legal values.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

  static ZMatrix identity(std::size_t n);
  static ZMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool operator==(const ZMatrix& o) const = default;

  ZMatrix transpose() const;
  ZMatrix operator*(const ZMatrix& o) const;
  ZMatrix operator+(const ZMatrix& o) const;
  ZMatrix operator-(const ZMatrix& o) const;
  ZMatrix negated() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  std::vector<Int> apply(const std::vector<Int>& x) const;  // M * x
  std::vector<Int> column(std::size_t j) const;

  /// [this | o] side by side; row counts must agree.
  ZMatrix hstack(const ZMatrix& o) const;
  ZMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                    std::size_t ncols) const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_multiple_of_row(std::size_t dst, std::size_t src, const Int& c);
  void add_multiple_of_col(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Exact determinant (Bareiss fraction-free elimination). Square only.
  Int determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

}  // namespace gkt
