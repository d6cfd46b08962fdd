// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace nabco {

/// Dense exact matrix, row-major storage.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t dim, const std::vector<Vec>& cols);
  static Matrix from_rows(std::size_t dim, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rational& c) const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  /// Matrix-vector product; the vector is a column in source coordinates.
  Vec apply(const Vec& v) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Reduced row echelon form.  The RREF of a matrix is unique, so everything
/// derived from it below (pivot sets, kernel special solutions, particular
/// solutions with free coordinates zero) is deterministic by construction.
struct EchelonForm {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot column of each pivot row, increasing
};

EchelonForm rref(Matrix m);

struct AffineSolution {
  Vec particular;            // free coordinates set to zero
  std::vector<Vec> kernel;   // one special solution per free column, ascending
};

/// Exact solution set of M x = b; nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b);

struct KernelImage {
  std::vector<Vec> kernel;   // special solutions, one per free column
  std::vector<Vec> image;    // original columns at pivot positions
  std::size_t rank = 0;
};

KernelImage kernel_image(const Matrix& m);

/// Standard basis vectors completing `subspace` to the ambient space: the e_i
/// whose index is a non-pivot column of the subspace's echelon form, in
/// increasing order of i.
std::vector<Vec> quotient_basis(std::size_t ambient_dim,
                                const std::vector<Vec>& subspace);

/// Exact inverse; ComputeError if singular.
Matrix invert(const Matrix& m);

/// Incremental echelon span.  Rows are kept in reduced echelon form, so
/// reduce() is the canonical remainder modulo the span: it does not depend on
/// the order vectors were added in.
class RowSpan {
 public:
  explicit RowSpan(std::size_t ambient) : ambient_(ambient) {}

  /// Adds v to the span; returns true if the dimension grew.
  bool add(Vec v);
  /// v minus its span component; zero iff v lies in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nabco
