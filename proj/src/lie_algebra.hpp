// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graded_space.hpp"
#include "matrix.hpp"

namespace nabco {

struct ValidationIssue {
  std::string check;   // stable check name for reports
  std::string detail;  // witness
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string check, std::string detail) {
    issues.push_back({std::move(check), std::move(detail)});
  }
};

/// Raw bracket table entry [basis a, basis b] = value.
struct BracketEntry {
  std::size_t a = 0;
  std::size_t b = 0;
  Vec value;
};

/// Lie algebra with weighted basis and rational structure constants.
/// Construction never rejects a bracket table; validate() reports violations
/// of antisymmetry, weight additivity, the Jacobi identity, and the grading
/// element axiom as data.  Entries given in one order are completed
/// antisymmetrically; entries given in both orders are checked against each
/// other.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(GradedVectorSpace space, std::vector<BracketEntry> entries,
                   std::optional<std::string> grading_name);

  const GradedVectorSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  const Vec& bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x) = [x, -].
  Matrix ad(const Vec& x) const;

  std::optional<std::size_t> grading_element() const { return h0_; }
  bool has_grading_element() const { return h0_.has_value(); }

  /// Indices of negative weight, in declaration order.
  std::vector<std::size_t> negative_indices() const;

  ValidationReport validate() const;
  /// InputError naming the first failed check if validate() fails.
  void ensure_valid() const;

 private:
  GradedVectorSpace space_;
  std::vector<Vec> table_;  // dim x dim, canonical antisymmetric completion
  std::vector<BracketEntry> raw_entries_;
  std::optional<std::size_t> h0_;
};

/// Adjoins a weight-0 grading element acting by [h, v] = weight(v) v, at
/// coordinate 0.  The input algebra must not already have one.
GradedLieAlgebra adjoin_grading_element(const GradedLieAlgebra& inner,
                                        const std::string& name);

/// exp(ad u) as a matrix on the algebra.  u must be supported in negative
/// weights, which makes ad(u) nilpotent and the sum finite.
Matrix exp_ad(const GradedLieAlgebra& algebra, const Vec& u);

/// Terms of the lower central series of the negative part u: L^1 = u,
/// L^{k+1} = [u, L^k], down to zero.  Bases are echelon spans in full
/// algebra coordinates.
std::vector<std::vector<Vec>> lower_central_series(const GradedLieAlgebra& g);

/// Abelianization H_1(u) = u/[u, u], computed weight by weight.  The
/// representatives are the basis elements of u whose coordinate is free in
/// the echelon form of [u, u], so they are deterministic and homogeneous.
struct Abelianization {
  std::vector<std::size_t> rep_indices;  // algebra basis indices, increasing
  std::vector<Vec> commutator_span;      // echelon basis of [u, u]
};

Abelianization abelianization(const GradedLieAlgebra& g);

/// Module over a graded Lie algebra: a graded space with one action matrix
/// per algebra basis element.  validate() checks the weight shift of each
/// action matrix, the bracket-action compatibility, and that a grading
/// element acts by weight.
class LieModule {
 public:
  LieModule() = default;
  LieModule(const GradedLieAlgebra* algebra, GradedVectorSpace space,
            std::vector<Matrix> action);

  const GradedLieAlgebra& algebra() const { return *algebra_; }
  const GradedVectorSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  const Matrix& action(std::size_t i) const { return action_[i]; }
  Vec act(const Vec& x, const Vec& v) const;

  ValidationReport validate() const;
  void ensure_valid() const;

 private:
  const GradedLieAlgebra* algebra_ = nullptr;  // not owned; must outlive
  GradedVectorSpace space_;
  std::vector<Matrix> action_;
};

/// The adjoint module of g over itself.
LieModule adjoint_module(const GradedLieAlgebra& g);

}  // namespace nabco
