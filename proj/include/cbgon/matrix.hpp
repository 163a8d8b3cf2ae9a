#pragma once

#include "cbgon/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cbgon {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t size);
  static Matrix from_integers(Field field, const std::vector<std::vector<long long>>& rows);
  /// All rows must have length `cols` and live in `field`.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& value);
  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector apply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form with its pivot columns; zero rows dropped.
struct EchelonForm {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivot_columns;
};

/// Exact rank. Fraction-free (Bareiss) elimination over QQ, plain Gaussian
/// elimination over F_p.
std::size_t rank(const Matrix& m);
EchelonForm row_reduce(const Matrix& m);
/// Basis of the right kernel, one vector per free column (free entry = 1).
std::vector<Vector> kernel(const Matrix& m);

/// Row space grown one vector at a time; keeps a reduced echelon basis.
class RowSpace {
 public:
  RowSpace(Field field, std::size_t cols);

  /// Returns true iff the row was independent of the current span.
  bool insert(std::span<const Scalar> row);
  bool contains(std::span<const Scalar> row) const;
  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t cols() const noexcept { return cols_; }

 private:
  Vector reduce(std::span<const Scalar> row) const;

  Field field_;
  std::size_t cols_;
  std::vector<Vector> basis_;  // each basis_[i] has a 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

}  // namespace cbgon
