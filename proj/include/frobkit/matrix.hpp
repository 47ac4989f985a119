#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "frobkit/errors.hpp"
#include "frobkit/fields.hpp"

namespace frobkit {

/// Coordinate vector over a field.
template <Field F>
using Coords = std::vector<typename F::Element>;

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
public:
  using Elt = typename F::Element;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        a_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<Coords<F>>& rows,
                          std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionError("ragged row list");
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Elt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Coords<F> row(std::size_t r) const {
    return Coords<F>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }

  bool is_zero() const {
    for (const Elt& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_field(b);
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elt& f = a.at(i, k);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Elt& g = b.at(k, j);
          if (!g.is_zero()) r.at(i, j) += f * g;
        }
      }
    return r;
  }

  Coords<F> apply(const Coords<F>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Coords<F> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Elt& e = at(i, j);
        if (!e.is_zero() && !v[j].is_zero()) r[i] += e * v[j];
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  void check_field(const Matrix& o) const {
    if (!(field_ == o.field_))
      throw FieldMismatchError("matrices over different fields");
  }
  void check_same_shape(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("matrix shape mismatch");
  }

  F field_;
  std::size_t rows_, cols_;
  std::vector<Elt> a_;
};

template <Field F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivot choice is the
/// first nonzero entry in column order, so the result is the canonical RREF.
template <Field F>
RrefResult<F> rref(const Matrix<F>& m) {
  Matrix<F> r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead)
      for (std::size_t c = col; c < r.cols(); ++c)
        std::swap(r.at(lead, c), r.at(sel, c));
    // normalize pivot row; entries left of col are already zero
    const auto inv_pivot = r.field().one() / r.at(lead, col);
    for (std::size_t c = col; c < r.cols(); ++c) {
      if (!r.at(lead, c).is_zero()) r.at(lead, c) = r.at(lead, c) * inv_pivot;
    }
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == lead) continue;
      const auto f = r.at(row, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (!r.at(lead, c).is_zero())
          r.at(row, c) = r.at(row, c) - f * r.at(lead, c);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

/// Canonical kernel basis read off the RREF free columns: each basis vector
/// has a 1 in its free column, the negated reduced column in the pivot
/// coordinates, and zeros elsewhere. Emitted in increasing free-column order,
/// e.g. kernel of [[1, 1]] is {(-1, 1)}.
template <Field F>
std::vector<Coords<F>> kernel_basis(const Matrix<F>& m) {
  const RrefResult<F> rr = rref(m);
  const F& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Coords<F>> basis;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (is_pivot[col]) continue;
    Coords<F> v(m.cols(), field.zero());
    v[col] = field.one();
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
      v[rr.pivots[r]] = -rr.reduced.at(r, col);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Particular solution of M x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.
template <Field F>
std::optional<Coords<F>> solve(const Matrix<F>& m, const Coords<F>& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
  Matrix<F> aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const RrefResult<F> rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols())
    return std::nullopt;  // pivot in the rhs column
  Coords<F> x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    x[rr.pivots[r]] = rr.reduced.at(r, m.cols());
  return x;
}

/// Exact inverse, or nullopt when singular. Non-square input is an error.
template <Field F>
std::optional<Matrix<F>> invert(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionError("invert: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  const RrefResult<F> rr = rref(aug);
  if (rr.rank() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.reduced.at(r, n + c);
  return inv;
}

}  // namespace frobkit
