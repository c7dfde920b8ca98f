#include "luroth/exact/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace luroth {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("QMatrix: entry count");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  QMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void QMatrix::append_row(std::span<const Rational> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("QMatrix::append_row: width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::without_column(std::size_t col) const {
  QMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != col) out(r, k++) = (*this)(r, c);
    }
  }
  return out;
}

QVector QMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix * vector: size");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) s += (*this)(r, c) * v[c];
    }
    out[r] = s;
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix * QMatrix: size");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool QMatrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<QVector> kernel(const QMatrix& m) {
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
      v[ech.pivot_columns[i]] = -ech.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det_fraction_free(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    const Integer den = common_denominator(m.row(r));
    scale *= den;
    for (std::size_t c = 0; c < n; ++c) {
      Rational v = m(r, c) * den;
      a[r * n + c] = v.get_num();
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

Rational pfaffian(const QMatrix& input) {
  if (!input.is_skew()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  if (input.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  QMatrix a = input;
  std::size_t n = a.rows();
  Rational result = 1;
  // Each step eliminates indices 0 and 1 and keeps the trailing block.
  while (n > 0) {
    std::size_t j = 1;
    while (j < n && sgn(a(0, j)) == 0) ++j;
    if (j == n) return 0;
    if (j != 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(1, c), a(j, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, 1), a(r, j));
      result = -result;
    }
    const Rational p = a(0, 1);
    result *= p;
    QMatrix next(n - 2, n - 2);
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t k = 2; k < n; ++k)
        next(i - 2, k - 2) = a(i, k) + (a(i, 0) * a(1, k) - a(i, 1) * a(0, k)) / p;
    a = std::move(next);
    n -= 2;
  }
  return result;
}

std::optional<LinearSolution> solve(const QMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto ech = rref(std::move(aug));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == m.cols()) return std::nullopt;
  LinearSolution sol;
  sol.x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
    sol.x[ech.pivot_columns[i]] = ech.reduced(i, m.cols());
  }
  sol.unique = ech.pivot_columns.size() == m.cols();
  return sol;
}

QVector signed_maximal_minors(const QMatrix& m) {
  if (m.cols() != m.rows() + 1) {
    throw std::invalid_argument("signed_maximal_minors: expected r x (r+1)");
  }
  QVector out(m.cols());
  const auto basis = kernel(m);
  if (basis.size() != 1) return out;  // rank deficient: every maximal minor vanishes
  const QVector& k = basis.front();
  std::size_t f = 0;
  while (sgn(k[f]) == 0) ++f;
  Rational cf = det_fraction_free(m.without_column(f));
  if (f % 2 == 1) cf = -cf;
  for (std::size_t j = 0; j < k.size(); ++j) out[j] = cf * k[j] / k[f];
  return out;
}

Rational det3(const QMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

QMatrix adjugate3(const QMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("adjugate3: not 3x3");
  QMatrix adj(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const std::size_t c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      Rational minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      adj(i, j) = (i + j) % 2 == 0 ? minor : Rational(-minor);
    }
  }
  return adj;
}

SkewMatrix6::SkewMatrix6(QMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 6 || m_.cols() != 6 || !m_.is_skew()) {
    throw std::invalid_argument("SkewMatrix6 requires a 6x6 skew-symmetric matrix");
  }
}

}  // namespace luroth
