#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linearr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring. Only instantiated for
/// Integer and Rational; gmpxx keeps rationals canonical after every
/// arithmetic operation, so stored entries are always in lowest terms.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("matrix entry count does not match shape");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<T> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<T>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& x : entries_) {
      if (x != 0) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix n = a;
    for (auto& x : n.entries_) x = -x;
    return n;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Result of a Smith normal form computation: u * input * v == s, with u and
/// v unimodular and s diagonal, nonnegative, each entry dividing the next.
struct SnfResult {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;

  /// Diagonal entries s(i,i) for i < min(rows, cols).
  std::vector<Integer> diagonal() const;
};

SnfResult snf(const IntMatrix& m);

/// Rank over the rationals by exact Gaussian elimination.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// cols - rank: dimension of the right kernel {x : m x = 0}.
std::size_t kernel_dim(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws on non-square input.
Integer determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

struct Cokernel {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility order
};

/// Structure of Z^rows / m Z^cols, read off the Smith normal form.
Cokernel cokernel(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace linearr
