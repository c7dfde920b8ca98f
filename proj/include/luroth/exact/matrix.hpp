#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "luroth/exact/rational.hpp"

namespace luroth {

using QVector = std::vector<Rational>;

/// Dense exact matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  void append_row(std::span<const Rational> row);
  void swap_rows(std::size_t a, std::size_t b);

  QMatrix transpose() const;
  QMatrix without_column(std::size_t c) const;
  QVector operator*(std::span<const Rational> v) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  bool is_skew() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivoting is deterministic: columns are visited
/// left to right and the first row (from the current one down) with a nonzero
/// entry becomes the pivot row.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Basis of the right null space; one vector per free column, with that
/// free entry equal to 1 and the other free entries 0.
std::vector<QVector> kernel(const QMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing each row's denominators.
Rational det_fraction_free(const QMatrix& m);

/// Pfaffian of an even-dimensional skew matrix, normalized so that the
/// block-diagonal matrix of [[0,1],[-1,0]] blocks has pfaffian 1.
Rational pfaffian(const QMatrix& m);

/// Solution of m * x = b; free variables set to zero. nullopt if inconsistent.
struct LinearSolution {
  QVector x;
  bool unique = false;
};
std::optional<LinearSolution> solve(const QMatrix& m, std::span<const Rational> b);

/// Signed maximal minors of an r x (r+1) matrix: c_j = (-1)^j det(m without
/// column j). Equivalent to Cramer's rule; the result spans the kernel when
/// the rank is r and is the zero vector otherwise.
QVector signed_maximal_minors(const QMatrix& m);

/// 3x3 helpers.
QMatrix adjugate3(const QMatrix& m);
Rational det3(const QMatrix& m);

/// 6x6 skew matrix of Morley-form coefficients, indexed by the degree-2
/// monomial order X0^2, X0X1, X0X2, X1^2, X1X2, X2^2.
class SkewMatrix6 {
 public:
  /// Throws std::invalid_argument unless m is 6x6 and skew.
  explicit SkewMatrix6(QMatrix m);
  const QMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t h, std::size_t k) const { return m_(h, k); }
  Rational pfaffian() const { return luroth::pfaffian(m_); }

 private:
  QMatrix m_;
};

}  // namespace luroth
