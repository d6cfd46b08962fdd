// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "extension.hpp"

#include <algorithm>

#include "error.hpp"

namespace nabco {

namespace {

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(i, j) = m.at(rows[i], cols[j]);
  return out;
}

}  // namespace

GradedExtension::GradedExtension(GradedLieAlgebra total,
                                 std::vector<std::string> kernel_names,
                                 std::optional<ActionSpec> action)
    : total_(std::move(total)),
      kernel_names_(std::move(kernel_names)),
      action_(std::move(action)) {
  std::vector<bool> in_kernel(total_.dim(), false);
  for (const std::string& name : kernel_names_)
    in_kernel[total_.space().index_of(name)] = true;
  for (std::size_t i = 0; i < total_.dim(); ++i)
    (in_kernel[i] ? kernel_ : quotient_).push_back(i);
  // Quotient algebra on the quotient-part basis.  Built unconditionally; it
  // is the honest quotient only once validation passes.
  std::vector<BasisElement> qbasis;
  for (std::size_t q : quotient_) qbasis.push_back(total_.space().basis()[q]);
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < quotient_.size(); ++i)
    for (std::size_t j = i + 1; j < quotient_.size(); ++j) {
      Vec b = project_quotient(total_.bracket(quotient_[i], quotient_[j]));
      if (!vec_is_zero(b)) entries.push_back({i, j, std::move(b)});
    }
  std::optional<std::string> grading;
  if (total_.has_grading_element() && !in_kernel[*total_.grading_element()])
    grading = total_.space().name(*total_.grading_element());
  quotient_algebra_ = GradedLieAlgebra(GradedVectorSpace(std::move(qbasis)),
                                       std::move(entries), grading);
}

ValidationReport GradedExtension::validate() const {
  ValidationReport report = total_.validate();
  if (!total_.has_grading_element())
    report.add("grading-element", "extension has no grading element");
  else {
    std::size_t h = *total_.grading_element();
    if (std::find(kernel_.begin(), kernel_.end(), h) != kernel_.end())
      report.add("grading-element",
                 "grading element " + total_.space().name(h) +
                     " is marked as a kernel element");
  }
  for (std::size_t k : kernel_)
    if (total_.space().weight(k) >= 0)
      report.add("kernel-negative",
                 "kernel element " + total_.space().name(k) + " has weight " +
                     std::to_string(total_.space().weight(k)));
  for (std::size_t q : quotient_) {
    bool is_h0 = total_.has_grading_element() && *total_.grading_element() == q;
    if (!is_h0 && total_.space().weight(q) >= 0)
      report.add("quotient-negative",
                 "quotient element " + total_.space().name(q) +
                     " has non-negative weight " +
                     std::to_string(total_.space().weight(q)));
  }
  for (std::size_t k : kernel_)
    for (std::size_t j = 0; j < total_.dim(); ++j) {
      const Vec& b = total_.bracket(j, k);
      for (std::size_t q : quotient_)
        if (sgn(b[q]) != 0) {
          report.add("kernel-ideal",
                     "[" + total_.space().name(j) + ", " +
                         total_.space().name(k) +
                         "] leaves the kernel at " + total_.space().name(q));
          break;
        }
    }
  if (action_) {
    std::size_t n = total_.dim();
    if (action_->generators.size() != action_->orders.size())
      report.add("action-shape", "one order per generator required");
    for (std::size_t g = 0; g < action_->generators.size(); ++g) {
      const Matrix& m = action_->generators[g];
      std::string tag = "generator " + std::to_string(g);
      if (m.rows() != n || m.cols() != n) {
        report.add("action-shape", tag + ": matrix shape mismatch");
        continue;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(m.at(i, j)) != 0 &&
              total_.space().weight(i) != total_.space().weight(j)) {
            report.add("action-weight",
                       tag + " does not preserve weight at (" +
                           total_.space().name(i) + ", " +
                           total_.space().name(j) + ")");
            i = n;
            break;
          }
      std::vector<bool> in_kernel(n, false);
      for (std::size_t k : kernel_) in_kernel[k] = true;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
          if (sgn(m.at(i, j)) != 0 && in_kernel[i] != in_kernel[j]) {
            report.add("action-block",
                       tag + " mixes kernel and quotient parts at (" +
                           total_.space().name(i) + ", " +
                           total_.space().name(j) + ")");
            j = n;
            break;
          }
      if (g < action_->orders.size()) {
        if (action_->orders[g] == 0) {
          report.add("action-order", tag + ": order must be positive");
        } else {
          Matrix p = Matrix::identity(n);
          for (unsigned k = 0; k < action_->orders[g]; ++k) p = p * m;
          if (!p.is_identity())
            report.add("action-order",
                       tag + " does not have the declared order " +
                           std::to_string(action_->orders[g]));
        }
      }
      for (std::size_t i = 0; i < n && m.rows() == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Vec lhs = m.apply(total_.bracket(i, j));
          Vec rhs = total_.bracket(m.column(i), m.column(j));
          if (lhs != rhs) {
            report.add("action-automorphism",
                       tag + " is not a Lie automorphism: fails on [" +
                           total_.space().name(i) + ", " +
                           total_.space().name(j) + "]");
            i = n;
            break;
          }
        }
      if (total_.has_grading_element()) {
        std::size_t h = *total_.grading_element();
        if (m.rows() == n && m.column(h) != vec_unit(n, h))
          report.add("action-grading",
                     tag + " does not fix the grading element");
      }
    }
  }
  return report;
}

void GradedExtension::ensure_valid() const {
  ValidationReport report = validate();
  if (!report.ok())
    throw InputError("invalid extension: " + report.issues[0].check + ": " +
                     report.issues[0].detail);
}

int GradedExtension::depth() const {
  int d = 0;
  for (std::size_t k : kernel_)
    d = std::max(d, -total_.space().weight(k));
  return d;
}

Vec GradedExtension::lift(const Vec& quotient_coords) const {
  Vec out = vec_zero(total_.dim());
  for (std::size_t i = 0; i < quotient_.size(); ++i)
    out[quotient_[i]] = quotient_coords[i];
  return out;
}

Vec GradedExtension::project_quotient(const Vec& total_coords) const {
  Vec out(quotient_.size());
  for (std::size_t i = 0; i < quotient_.size(); ++i)
    out[i] = total_coords[quotient_[i]];
  return out;
}

Vec GradedExtension::project_kernel(const Vec& total_coords) const {
  Vec out(kernel_.size());
  for (std::size_t i = 0; i < kernel_.size(); ++i)
    out[i] = total_coords[kernel_[i]];
  return out;
}

Vec GradedExtension::embed_kernel(const Vec& kernel_coords) const {
  Vec out = vec_zero(total_.dim());
  for (std::size_t i = 0; i < kernel_.size(); ++i)
    out[kernel_[i]] = kernel_coords[i];
  return out;
}

GradedExtension GradedExtension::truncated(int stage) const {
  if (stage < 0) throw InputError("truncation stage must be >= 0");
  std::vector<bool> keep(total_.dim(), true);
  std::vector<std::string> kept_kernel_names;
  for (std::size_t k : kernel_) {
    if (total_.space().weight(k) < -stage)
      keep[k] = false;
    else
      kept_kernel_names.push_back(total_.space().name(k));
  }
  std::vector<std::size_t> kept;
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < total_.dim(); ++i)
    if (keep[i]) {
      kept.push_back(i);
      basis.push_back(total_.space().basis()[i]);
    }
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const Vec& b = total_.bracket(kept[i], kept[j]);
      Vec v(kept.size());
      for (std::size_t p = 0; p < kept.size(); ++p) v[p] = b[kept[p]];
      if (!vec_is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  std::optional<std::string> grading;
  if (total_.has_grading_element())
    grading = total_.space().name(*total_.grading_element());
  GradedLieAlgebra algebra(GradedVectorSpace(std::move(basis)),
                           std::move(entries), grading);
  std::optional<ActionSpec> action;
  if (action_) {
    action = ActionSpec{};
    for (const Matrix& m : action_->generators)
      action->generators.push_back(submatrix(m, kept, kept));
    action->orders = action_->orders;
  }
  return GradedExtension(std::move(algebra), std::move(kept_kernel_names),
                         std::move(action));
}

std::vector<std::size_t> GradedExtension::kernel_slice(int stage) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kernel_.size(); ++i)
    if (total_.space().weight(kernel_[i]) == -stage) out.push_back(i);
  return out;
}

LieModule GradedExtension::slice_module(int stage) const {
  std::vector<std::size_t> slice = kernel_slice(stage);
  std::vector<BasisElement> basis;
  for (std::size_t i : slice)
    basis.push_back(total_.space().basis()[kernel_[i]]);
  GradedVectorSpace space(std::move(basis));
  std::size_t d = space.dim();
  std::vector<Matrix> action;
  for (std::size_t q = 0; q < quotient_algebra_.dim(); ++q) {
    Matrix m(d, d);
    bool is_h0 = quotient_algebra_.has_grading_element() &&
                 *quotient_algebra_.grading_element() == q;
    if (is_h0)
      for (std::size_t i = 0; i < d; ++i) m.at(i, i) = rat(-stage);
    action.push_back(std::move(m));
  }
  return LieModule(&quotient_algebra_, std::move(space), std::move(action));
}

std::vector<Matrix> GradedExtension::action_on_quotient() const {
  std::vector<Matrix> out;
  if (!action_) return out;
  for (const Matrix& m : action_->generators)
    out.push_back(submatrix(m, quotient_, quotient_));
  return out;
}

std::vector<Matrix> GradedExtension::action_on_slice(int stage) const {
  std::vector<Matrix> out;
  if (!action_) return out;
  std::vector<std::size_t> total_idx;
  for (std::size_t i : kernel_slice(stage)) total_idx.push_back(kernel_[i]);
  for (const Matrix& m : action_->generators)
    out.push_back(submatrix(m, total_idx, total_idx));
  return out;
}

std::optional<ActionPair> GradedExtension::slice_action(int stage) const {
  if (!action_) return std::nullopt;
  return ActionPair{action_on_quotient(), action_on_slice(stage)};
}

}  // namespace nabco
