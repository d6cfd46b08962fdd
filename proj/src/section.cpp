// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "section.hpp"

#include "error.hpp"

namespace nabco {

Matrix canonical_section(const GradedExtension& ext) {
  const std::vector<std::size_t>& q = ext.quotient_indices();
  Matrix m(ext.total().dim(), q.size());
  for (std::size_t j = 0; j < q.size(); ++j) m.at(q[j], j) = 1;
  return m;
}

Matrix section_correction(const GradedExtension& ext, const Matrix& section) {
  const std::vector<std::size_t>& k = ext.kernel_indices();
  Matrix out(k.size(), section.cols());
  for (std::size_t j = 0; j < section.cols(); ++j)
    for (std::size_t i = 0; i < k.size(); ++i)
      out.at(i, j) = section.at(k[i], j);
  return out;
}

Matrix section_from_correction(const GradedExtension& ext,
                               const Matrix& correction) {
  Matrix m = canonical_section(ext);
  const std::vector<std::size_t>& k = ext.kernel_indices();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < k.size(); ++i)
      m.at(k[i], j) += correction.at(i, j);
  return m;
}

ValidationReport validate_section(const GradedExtension& ext,
                                  const Matrix& section, bool graded) {
  ValidationReport report;
  const GradedLieAlgebra& total = ext.total();
  const GradedLieAlgebra& g = ext.quotient();
  if (section.rows() != total.dim() || section.cols() != g.dim()) {
    report.add("section-shape", "expected " + std::to_string(total.dim()) +
                                    " x " + std::to_string(g.dim()));
    return report;
  }
  for (std::size_t j = 0; j < g.dim(); ++j) {
    Vec proj = ext.project_quotient(section.column(j));
    if (proj != vec_unit(g.dim(), j)) {
      report.add("section-projection",
                 "pi(s(" + g.space().name(j) + ")) != " + g.space().name(j));
    }
  }
  for (std::size_t j = 0; j < g.dim(); ++j) {
    int w = g.space().weight(j);
    for (std::size_t i = 0; i < total.dim(); ++i) {
      if (sgn(section.at(i, j)) == 0) continue;
      int wi = total.space().weight(i);
      if (graded ? (wi != w) : (wi > w)) {
        report.add(graded ? "section-graded" : "section-filtration",
                   "s(" + g.space().name(j) + ") has a component at " +
                       total.space().name(i) + " of weight " +
                       std::to_string(wi));
        break;
      }
    }
  }
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      Vec lhs = total.bracket(section.column(a), section.column(b));
      Vec rhs = section.apply(g.bracket(a, b));
      if (lhs != rhs)
        report.add("section-homomorphism",
                   "[s(" + g.space().name(a) + "), s(" + g.space().name(b) +
                       ")] != s([" + g.space().name(a) + ", " +
                       g.space().name(b) + "])");
    }
  return report;
}

bool is_lie_section(const GradedExtension& ext, const Matrix& section) {
  return validate_section(ext, section, false).ok();
}

bool is_equivariant_section(const GradedExtension& ext, const Matrix& section) {
  if (!ext.action()) return true;
  std::vector<Matrix> on_q = ext.action_on_quotient();
  for (std::size_t g = 0; g < on_q.size(); ++g) {
    const Matrix& on_total = ext.action()->generators[g];
    if (on_total * section != section * on_q[g]) return false;
  }
  return true;
}

Matrix conjugate_section(const GradedExtension& ext, const Vec& kernel_u,
                         const Matrix& section) {
  if (kernel_u.size() != ext.kernel_indices().size())
    throw InputError("conjugator must be given in kernel coordinates");
  Vec u = ext.embed_kernel(kernel_u);
  return exp_ad(ext.total(), u) * section;
}

NormalizedSection normalize_section(const GradedExtension& ext,
                                    const Matrix& section) {
  ValidationReport check = validate_section(ext, section, false);
  if (!check.ok())
    throw InputError("normalize: not a filtration-preserving Lie section: " +
                     check.issues[0].check + ": " + check.issues[0].detail);
  const GradedLieAlgebra& total = ext.total();
  const GradedLieAlgebra& g = ext.quotient();
  if (!g.has_grading_element())
    throw InputError("normalize requires a grading element");
  std::size_t h_q = *g.grading_element();
  std::size_t h_t = *total.grading_element();
  std::size_t kdim = ext.kernel_indices().size();
  Vec u = vec_zero(kdim);
  Matrix current = section;
  int depth = ext.depth();
  for (int k = 1; k <= depth; ++k) {
    Vec dev = current.column(h_q);
    dev[h_t] -= 1;  // deviation of the grading element, kernel-valued
    Vec dev_kernel = ext.project_kernel(dev);
    Vec correction = vec_zero(kdim);
    bool any = false;
    for (std::size_t i = 0; i < kdim; ++i) {
      if (total.space().weight(ext.kernel_indices()[i]) != -k) continue;
      if (sgn(dev_kernel[i]) == 0) continue;
      correction[i] = -dev_kernel[i] / rat(k);
      any = true;
    }
    if (any) {
      u = vec_add(u, correction);
      current = conjugate_section(ext, u, section);
    }
  }
  Vec final_h = current.column(h_q);
  if (final_h != vec_unit(total.dim(), h_t))
    throw ComputeError("normalize: grading element not fixed after sweep");
  ValidationReport graded_check = validate_section(ext, current, true);
  if (!graded_check.ok())
    throw ComputeError("normalize: normalized section is not graded: " +
                       graded_check.issues[0].detail);
  return NormalizedSection{std::move(u), std::move(current)};
}

}  // namespace nabco
