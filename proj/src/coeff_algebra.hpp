// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace nabco {

/// Finite-dimensional commutative unital algebra over the rationals,
/// presented by a basis and a structure-constant table.  The constructor
/// checks commutativity, associativity, and the unit law exactly and raises
/// InputError with the offending triple otherwise.
class CoefficientAlgebra {
 public:
  CoefficientAlgebra(std::string name, std::vector<std::string> basis_names,
                     std::vector<std::vector<Vec>> table, Vec unit);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_names_.size(); }
  const std::string& basis_name(std::size_t i) const { return basis_names_[i]; }
  const Vec& unit() const { return unit_; }
  const Vec& table(std::size_t i, std::size_t j) const { return table_[i][j]; }

  /// Bilinear product of coordinate vectors.
  Vec mul(const Vec& a, const Vec& b) const;

  static CoefficientAlgebra rationals();
  /// Dual numbers: rationals adjoin eps with eps^2 = 0.
  static CoefficientAlgebra dual_numbers();
  /// Split algebra: two orthogonal idempotents (product of two copies of the
  /// rationals).
  static CoefficientAlgebra split();
  /// Rationals adjoin t with t^3 = 0.
  static CoefficientAlgebra truncated_cubic();
  /// Lookup by name: "rationals", "dual", "split", "t3"; InputError otherwise.
  static CoefficientAlgebra by_name(const std::string& name);

 private:
  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<std::vector<Vec>> table_;  // table_[i][j] = e_i * e_j
  Vec unit_;
};

/// Element tagged with the algebra it lives in; mixing algebras is an error
/// even when dimensions agree.
struct AlgebraElement {
  std::string algebra;
  Vec coords;
};

AlgebraElement make_element(const CoefficientAlgebra& a, Vec coords);
AlgebraElement element_mul(const CoefficientAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y);
AlgebraElement element_add(const CoefficientAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y);

/// Embedding of a rational scalar along the unit.
Vec scalar_embed(const CoefficientAlgebra& a, const Rational& c);

/// Renders coordinates against the basis names, e.g. "5 + 2*eps"; the basis
/// element named "1" prints as a bare rational.  Zero renders as "0".
std::string format_algebra_element(const CoefficientAlgebra& a, const Vec& v);

}  // namespace nabco
