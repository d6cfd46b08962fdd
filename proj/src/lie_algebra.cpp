// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "lie_algebra.hpp"

#include <algorithm>

#include "error.hpp"

namespace nabco {

GradedLieAlgebra::GradedLieAlgebra(GradedVectorSpace space,
                                   std::vector<BracketEntry> entries,
                                   std::optional<std::string> grading_name)
    : space_(std::move(space)), raw_entries_(std::move(entries)) {
  std::size_t n = space_.dim();
  table_.assign(n * n, vec_zero(n));
  std::vector<bool> given(n * n, false);
  for (const BracketEntry& e : raw_entries_) {
    if (e.a >= n || e.b >= n || e.value.size() != n)
      throw InputError("bracket entry out of range");
    table_[e.a * n + e.b] = e.value;
    given[e.a * n + e.b] = true;
  }
  // Antisymmetric completion for pairs given in one order only.  Pairs given
  // in both orders keep their raw values; validate() compares them.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (given[i * n + j] && !given[j * n + i] && i != j)
        table_[j * n + i] = vec_scale(rat(-1), table_[i * n + j]);
  if (grading_name) h0_ = space_.index_of(*grading_name);
}

Vec GradedLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw ComputeError("bracket dimension mismatch");
  Vec r = vec_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      vec_axpy(r, x[i] * y[j], bracket(i, j));
    }
  }
  return r;
}

Matrix GradedLieAlgebra::ad(const Vec& x) const {
  std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    m.set_column(j, bracket(x, vec_unit(n, j)));
  return m;
}

std::vector<std::size_t> GradedLieAlgebra::negative_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim(); ++i)
    if (space_.weight(i) < 0) idx.push_back(i);
  return idx;
}

ValidationReport GradedLieAlgebra::validate() const {
  ValidationReport report;
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& v = bracket(i, j);
      int w = space_.weight(i) + space_.weight(j);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(v[k]) != 0 && space_.weight(k) != w) {
          report.add("weight-additivity",
                     "[" + space_.name(i) + ", " + space_.name(j) +
                         "] has a component at " + space_.name(k) +
                         " of weight " + std::to_string(space_.weight(k)) +
                         ", expected " + std::to_string(w));
          break;
        }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec sum = vec_add(bracket(i, j), bracket(j, i));
      if (i == j) sum = bracket(i, i);
      if (!vec_is_zero(sum)) {
        report.add("antisymmetry",
                   i == j ? "[" + space_.name(i) + ", " + space_.name(i) +
                                "] is nonzero"
                          : "[" + space_.name(i) + ", " + space_.name(j) +
                                "] + [" + space_.name(j) + ", " +
                                space_.name(i) + "] is nonzero");
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec jac = bracket(bracket(i, j), vec_unit(n, k));
        jac = vec_add(jac, bracket(bracket(j, k), vec_unit(n, i)));
        jac = vec_add(jac, bracket(bracket(k, i), vec_unit(n, j)));
        if (!vec_is_zero(jac))
          report.add("jacobi", "jacobi fails on (" + space_.name(i) + ", " +
                                   space_.name(j) + ", " + space_.name(k) +
                                   ")");
      }
  if (h0_) {
    std::size_t h = *h0_;
    if (space_.weight(h) != 0)
      report.add("grading-element",
                 "grading element " + space_.name(h) + " has weight " +
                     std::to_string(space_.weight(h)) + ", expected 0");
    for (std::size_t j = 0; j < n; ++j) {
      Vec expected = vec_scale(rat(space_.weight(j)), vec_unit(n, j));
      if (bracket(vec_unit(n, h), vec_unit(n, j)) != expected)
        report.add("grading-element",
                   "[" + space_.name(h) + ", " + space_.name(j) +
                       "] != " + std::to_string(space_.weight(j)) + " " +
                       space_.name(j));
    }
  }
  return report;
}

void GradedLieAlgebra::ensure_valid() const {
  ValidationReport report = validate();
  if (!report.ok())
    throw InputError("invalid Lie algebra: " + report.issues[0].check + ": " +
                     report.issues[0].detail);
}

GradedLieAlgebra adjoin_grading_element(const GradedLieAlgebra& inner,
                                        const std::string& name) {
  if (inner.has_grading_element())
    throw InputError("algebra already has a grading element");
  std::vector<BasisElement> basis;
  basis.push_back({name, 0});
  for (const BasisElement& b : inner.space().basis()) basis.push_back(b);
  GradedVectorSpace space(std::move(basis));
  std::size_t n = inner.dim();
  std::vector<BracketEntry> entries;
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = vec_zero(n + 1);
    v[j + 1] = rat(inner.space().weight(j));
    entries.push_back({0, j + 1, std::move(v)});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& b = inner.bracket(i, j);
      if (vec_is_zero(b)) continue;
      Vec v = vec_zero(n + 1);
      for (std::size_t k = 0; k < n; ++k) v[k + 1] = b[k];
      entries.push_back({i + 1, j + 1, std::move(v)});
    }
  return GradedLieAlgebra(std::move(space), std::move(entries), name);
}

Matrix exp_ad(const GradedLieAlgebra& algebra, const Vec& u) {
  const GradedVectorSpace& space = algebra.space();
  std::size_t n = algebra.dim();
  if (u.size() != n) throw ComputeError("exp_ad dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(u[i]) != 0 && space.weight(i) >= 0)
      throw InputError("exp_ad argument has a component of weight " +
                       std::to_string(space.weight(i)) + " at " +
                       space.name(i) + ", expected negative weights only");
  Matrix ad_u = algebra.ad(u);
  Matrix result = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  Rational factorial(1);
  // ad(u) strictly lowers weight, so it is nilpotent of index at most the
  // weight span plus one.
  int span = 1;
  if (n > 0) {
    int lo = space.weight(0), hi = space.weight(0);
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, space.weight(i));
      hi = std::max(hi, space.weight(i));
    }
    span = hi - lo + 1;
  }
  for (int k = 1; k <= span + 1; ++k) {
    power = power * ad_u;
    if (power.is_zero()) return result;
    factorial *= rat(k);
    result = result + power.scaled(1 / factorial);
  }
  if (!(power * ad_u).is_zero())
    throw ComputeError("exp_ad: ad(u) is not nilpotent");
  return result;
}

std::vector<std::vector<Vec>> lower_central_series(const GradedLieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<std::size_t> neg = g.negative_indices();
  std::vector<std::vector<Vec>> terms;
  RowSpan first(n);
  for (std::size_t i : neg) first.add(vec_unit(n, i));
  if (first.dim() == 0) return terms;
  terms.push_back(first.rows());
  while (true) {
    const std::vector<Vec>& prev = terms.back();
    RowSpan next(n);
    for (std::size_t i : neg)
      for (const Vec& v : prev) next.add(g.bracket(vec_unit(n, i), v));
    if (next.dim() == 0) break;
    terms.push_back(next.rows());
  }
  return terms;
}

Abelianization abelianization(const GradedLieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<std::size_t> neg = g.negative_indices();
  RowSpan commutators(n);
  for (std::size_t a : neg)
    for (std::size_t b : neg)
      if (a < b) commutators.add(g.bracket(a, b));
  Abelianization ab;
  ab.commutator_span = commutators.rows();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : commutators.pivots()) is_pivot[p] = true;
  for (std::size_t i : neg)
    if (!is_pivot[i]) ab.rep_indices.push_back(i);
  return ab;
}

LieModule::LieModule(const GradedLieAlgebra* algebra, GradedVectorSpace space,
                     std::vector<Matrix> action)
    : algebra_(algebra), space_(std::move(space)), action_(std::move(action)) {
  if (!algebra_) throw ComputeError("module without algebra");
  if (action_.size() != algebra_->dim())
    throw InputError("module: one action matrix per algebra basis element");
  for (const Matrix& m : action_)
    if (m.rows() != space_.dim() || m.cols() != space_.dim())
      throw InputError("module: action matrix shape mismatch");
}

Vec LieModule::act(const Vec& x, const Vec& v) const {
  Vec r = vec_zero(space_.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    vec_axpy(r, x[i], action_[i].apply(v));
  }
  return r;
}

ValidationReport LieModule::validate() const {
  ValidationReport report;
  const GradedVectorSpace& g = algebra_->space();
  std::size_t n = algebra_->dim();
  std::size_t d = space_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (sgn(action_[i].at(r, c)) != 0 &&
            space_.weight(r) != space_.weight(c) + g.weight(i)) {
          report.add("module-weight",
                     "action of " + g.name(i) + " at (" + space_.name(r) +
                         ", " + space_.name(c) + ") violates the weight shift");
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(d, d);
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = algebra_->bracket(i, j)[k];
        if (sgn(c) != 0) lhs = lhs + action_[k].scaled(c);
      }
      Matrix rhs = action_[i] * action_[j] - action_[j] * action_[i];
      if (lhs != rhs)
        report.add("module-bracket", "action of [" + g.name(i) + ", " +
                                         g.name(j) +
                                         "] differs from the commutator");
    }
  if (algebra_->has_grading_element()) {
    std::size_t h = *algebra_->grading_element();
    for (std::size_t c = 0; c < d; ++c) {
      Vec expected = vec_scale(rat(space_.weight(c)), vec_unit(d, c));
      if (action_[h].column(c) != expected)
        report.add("module-grading", "grading element does not act by weight " +
                                         std::to_string(space_.weight(c)) +
                                         " on " + space_.name(c));
    }
  }
  return report;
}

void LieModule::ensure_valid() const {
  ValidationReport report = validate();
  if (!report.ok())
    throw InputError("invalid module: " + report.issues[0].check + ": " +
                     report.issues[0].detail);
}

LieModule adjoint_module(const GradedLieAlgebra& g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i)
    action.push_back(g.ad(vec_unit(g.dim(), i)));
  return LieModule(&g, g.space(), std::move(action));
}

}  // namespace nabco
