// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0
//
// The shipped example extensions rebuilt directly through the core API, so
// core tests do not depend on the document layer.  Kept in sync with the
// JSON files under fixtures/ by the document round-trip tests.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "error.hpp"
#include "extension.hpp"
#include "lie_algebra.hpp"

namespace nabco::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Heisenberg quotient with central kernel: h, x, y quotient, z kernel,
/// [x, y] = z.  No graded Lie section exists.
inline GradedExtension heisenberg_extension() {
  GradedVectorSpace space({{"h", 0}, {"x", -1}, {"y", -1}, {"z", -2}});
  std::vector<BracketEntry> entries{
      {0, 1, {rat(0), rat(-1), rat(0), rat(0)}},
      {0, 2, {rat(0), rat(0), rat(-1), rat(0)}},
      {0, 3, {rat(0), rat(0), rat(0), rat(-2)}},
      {1, 2, {rat(0), rat(0), rat(0), rat(1)}},
  };
  GradedLieAlgebra total(space, entries, "h");
  return GradedExtension(total, {"z"}, std::nullopt);
}

/// Abelian beyond the grading: h, x quotient, w kernel; the section torsor is
/// an affine line.
inline GradedExtension line_extension() {
  GradedVectorSpace space({{"h", 0}, {"x", -1}, {"w", -1}});
  std::vector<BracketEntry> entries{
      {0, 1, {rat(0), rat(-1), rat(0)}},
      {0, 2, {rat(0), rat(0), rat(-1)}},
  };
  GradedLieAlgebra total(space, entries, "h");
  return GradedExtension(total, {"w"}, std::nullopt);
}

/// line_extension with the order-2 flip of the kernel element.
inline GradedExtension twisted_line_extension() {
  GradedVectorSpace space({{"h", 0}, {"x", -1}, {"w", -1}});
  std::vector<BracketEntry> entries{
      {0, 1, {rat(0), rat(-1), rat(0)}},
      {0, 2, {rat(0), rat(0), rat(-1)}},
  };
  GradedLieAlgebra total(space, entries, "h");
  Matrix flip = Matrix::identity(3);
  flip.at(2, 2) = rat(-1);
  return GradedExtension(total, {"w"}, ActionSpec{{flip}, {2}});
}

/// Single point: h, x, y, w quotient, z kernel, [x, y] = w + z; the unique
/// graded section sends w to w + z.
inline GradedExtension single_point_extension() {
  GradedVectorSpace space({{"h", 0}, {"x", -1}, {"y", -1}, {"w", -2}, {"z", -2}});
  std::vector<BracketEntry> entries{
      {0, 1, {rat(0), rat(-1), rat(0), rat(0), rat(0)}},
      {0, 2, {rat(0), rat(0), rat(-1), rat(0), rat(0)}},
      {0, 3, {rat(0), rat(0), rat(0), rat(-2), rat(0)}},
      {0, 4, {rat(0), rat(0), rat(0), rat(0), rat(-2)}},
      {1, 2, {rat(0), rat(0), rat(0), rat(1), rat(1)}},
  };
  GradedLieAlgebra total(space, entries, "h");
  return GradedExtension(total, {"z"}, std::nullopt);
}

/// Two-step abelian: h, x quotient, z kernel in weight -2; normalization
/// playground.
inline GradedExtension abelian_two_step_extension() {
  GradedVectorSpace space({{"h", 0}, {"x", -1}, {"z", -2}});
  std::vector<BracketEntry> entries{
      {0, 1, {rat(0), rat(-1), rat(0)}},
      {0, 2, {rat(0), rat(0), rat(-2)}},
  };
  GradedLieAlgebra total(space, entries, "h");
  return GradedExtension(total, {"z"}, std::nullopt);
}

}  // namespace nabco::testing
