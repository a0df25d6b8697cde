#include "zmatrix.hpp"

#include <sstream>

namespace gkt {

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ZMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorKind::DimensionMismatch, "ragged row list");
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  if (cols_ != o.rows_)
    fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  ZMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t t = 0; t < cols_; ++t) {
      const Int& a = at(i, t);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(t, j);
    }
  return p;
}

ZMatrix ZMatrix::operator+(const ZMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  ZMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s.entries_[i] = entries_[i] + o.entries_[i];
  return s;
}

ZMatrix ZMatrix::operator-(const ZMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  ZMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s.entries_[i] = entries_[i] - o.entries_[i];
  return s;
}

ZMatrix ZMatrix::negated() const {
  ZMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = -entries_[i];
  return s;
}

bool ZMatrix::is_zero() const {
  for (const Int& x : entries_)
    if (x != 0) return false;
  return true;
}

std::vector<Int> ZMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
  std::vector<Int> y(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

std::vector<Int> ZMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

ZMatrix ZMatrix::hstack(const ZMatrix& o) const {
  if (rows_ != o.rows_) fail(ErrorKind::DimensionMismatch, "hstack row mismatch");
  ZMatrix m(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

ZMatrix ZMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  ZMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
  return m;
}

void ZMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void ZMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void ZMatrix::add_multiple_of_row(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void ZMatrix::add_multiple_of_col(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void ZMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void ZMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

Int ZMatrix::determinant() const {
  if (!is_square()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  ZMatrix a = *this;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::string ZMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace gkt
