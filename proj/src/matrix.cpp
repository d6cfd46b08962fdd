// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "matrix.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace nabco {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t dim, const std::vector<Vec>& cols) {
  Matrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw ComputeError("column dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t dim, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw ComputeError("row dimension mismatch");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw ComputeError("column dimension mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw ComputeError("matrix product shape mismatch");
  Matrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += x * other.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ComputeError("matrix sum shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += other.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ComputeError("matrix difference shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= other.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(*this);
  for (Rational& x : r.a_) x *= c;
  return r;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw ComputeError("matrix apply shape mismatch");
  Vec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(at(i, j)) == 0) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const Rational& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j == 0 ? "[" : ", ") << format_rational(at(i, j));
    out << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) out << "[]";
  return out.str();
}

EchelonForm rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m.at(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(row, j));
    Rational inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m.at(i, col)) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return EchelonForm{std::move(m), std::move(pivots)};
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw ComputeError("solve_affine shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  EchelonForm ef = rref(std::move(aug));
  for (std::size_t p : ef.pivots)
    if (p == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular = vec_zero(m.cols());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r)
    sol.particular[ef.pivots[r]] = ef.mat.at(r, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec k = vec_zero(m.cols());
    k[f] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r)
      k[ef.pivots[r]] = -ef.mat.at(r, f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

KernelImage kernel_image(const Matrix& m) {
  EchelonForm ef = rref(m);
  KernelImage ki;
  ki.rank = ef.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivots) {
    is_pivot[p] = true;
    ki.image.push_back(m.column(p));
  }
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec k = vec_zero(m.cols());
    k[f] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r)
      k[ef.pivots[r]] = -ef.mat.at(r, f);
    ki.kernel.push_back(std::move(k));
  }
  return ki;
}

std::vector<Vec> quotient_basis(std::size_t ambient_dim,
                                const std::vector<Vec>& subspace) {
  RowSpan span(ambient_dim);
  for (const Vec& v : subspace) {
    if (v.size() != ambient_dim) throw ComputeError("quotient_basis dimension mismatch");
    span.add(v);
  }
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : span.pivots()) is_pivot[p] = true;
  std::vector<Vec> reps;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    if (!is_pivot[i]) reps.push_back(vec_unit(ambient_dim, i));
  return reps;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw ComputeError("invert: matrix not square");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  EchelonForm ef = rref(std::move(aug));
  if (ef.pivots.size() != n || ef.pivots.back() != n - 1)
    throw ComputeError("invert: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = ef.mat.at(i, n + j);
  return inv;
}

bool RowSpan::add(Vec v) {
  if (v.size() != ambient_) throw ComputeError("RowSpan dimension mismatch");
  v = reduce(std::move(v));
  std::size_t lead = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (sgn(v[j]) != 0) {
      lead = j;
      break;
    }
  if (lead == ambient_) return false;
  Rational inv = 1 / v[lead];
  for (Rational& x : v) x *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r][lead];
    if (sgn(f) != 0) vec_axpy(rows_[r], -f, v);
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

Vec RowSpan::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = v[pivots_[r]];
    if (sgn(f) != 0) vec_axpy(v, -f, rows_[r]);
  }
  return v;
}

bool RowSpan::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

}  // namespace nabco
