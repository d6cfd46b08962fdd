// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "extension.hpp"

namespace nabco {

/// A linear section of an extension, stored as its total-coordinate matrix:
/// column q is the image of the q-th quotient basis element.

/// The canonical splitting as a matrix (total dim x quotient dim).
Matrix canonical_section(const GradedExtension& ext);

/// Kernel-valued correction of a section against the canonical splitting:
/// kernel coordinates x quotient coordinates.
Matrix section_correction(const GradedExtension& ext, const Matrix& section);

/// Rebuilds a section matrix from its correction.
Matrix section_from_correction(const GradedExtension& ext,
                               const Matrix& correction);

/// Checks in order: shape, projection (pi s = id), weight preservation
/// (graded sections) or filtration preservation when graded is false, and the
/// Lie homomorphism property on all basis pairs.
ValidationReport validate_section(const GradedExtension& ext,
                                  const Matrix& section, bool graded);

bool is_lie_section(const GradedExtension& ext, const Matrix& section);

/// True when the section commutes with every action generator.
bool is_equivariant_section(const GradedExtension& ext, const Matrix& section);

/// exp(ad u) composed with the section; u in kernel coordinates.
Matrix conjugate_section(const GradedExtension& ext, const Vec& kernel_u,
                         const Matrix& section);

struct NormalizedSection {
  Vec conjugator;    // kernel coordinates u with exp(ad u) s = graded
  Matrix graded;     // the graded section fixing the grading element
};

/// Weight-by-weight normalization of a filtration-preserving Lie section to
/// the unique graded one in its conjugation orbit.  At each depth k the
/// deviation of the grading element determines the weight -k component of the
/// conjugator via [u_k, h] = k u_k, so the result is unique and exact.
NormalizedSection normalize_section(const GradedExtension& ext,
                                    const Matrix& section);

}  // namespace nabco
