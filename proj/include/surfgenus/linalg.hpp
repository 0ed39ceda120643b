#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace surfgenus {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Dense row-major matrix over the rationals. All arithmetic is exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Throws DimensionMismatch unless entries.size() == rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  // Stacks the vectors as rows; each must have length `cols`.
  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  RationalMatrix scaled(const Rational& factor) const;
  // Keeps the listed columns, in the given order.
  RationalMatrix select_columns(std::span<const std::size_t> cols) const;

  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column of the reduced row echelon form.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Dimension of the span of the given vectors (all of length `dim`).
std::size_t span_dim(std::span<const RationalVector> vectors, std::size_t dim);

// dim(span a ∩ span b) = dim span a + dim span b - dim span(a ∪ b).
// The ambient dimension is taken from the first vector; throws DimensionMismatch
// if any vector disagrees. Empty inputs give 0.
std::size_t intersection_dim(std::span<const RationalVector> a, std::span<const RationalVector> b);

}  // namespace surfgenus
