// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "extension.hpp"
#include "poly.hpp"
#include "section.hpp"

namespace nabco {

/// One coordinate of the space of candidate graded sections: an invariant
/// weight-preserving correction of the canonical splitting.  The map is in
/// kernel x quotient coordinates.
struct VarietyCoordinate {
  std::string name;
  int weight = 0;
  int stage = 0;  // = -weight
  Matrix map;
};

/// One polynomial equation: the coefficient of a kernel basis element in the
/// bracket defect of a quotient basis pair.  Polynomials are kept raw
/// (unnormalized) so that rows of one stage assemble into the defect cochain.
struct VarietyConstraint {
  std::size_t a = 0;       // quotient basis indices, a < b
  std::size_t b = 0;
  std::size_t target = 0;  // kernel coordinate
  int weight = 0;          // weight of the target, = stage * -1
  Poly poly;               // variables are coordinate indices
};

struct SectionVariety {
  std::vector<VarietyCoordinate> coordinates;
  std::vector<VarietyConstraint> constraints;
};

/// Coordinates and defect equations of graded (invariant) Lie sections.
/// Coordinates are enumerated weight by weight from -1 downward; with an
/// action each weight block contributes an echelon basis of the invariant
/// weight-preserving maps, otherwise one coordinate per matching basis pair.
SectionVariety section_variety(const GradedExtension& ext);

/// The section at a rational coordinate assignment.
Matrix section_at(const GradedExtension& ext, const SectionVariety& variety,
                  const Vec& values);

/// Evaluates every constraint at a rational point; true when all vanish.
bool satisfies_constraints(const SectionVariety& variety, const Vec& values);

}  // namespace nabco
