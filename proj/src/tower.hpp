// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "coeff_algebra.hpp"
#include "variety.hpp"

namespace nabco {

enum class StageStatus {
  Trivial,       // kernel slice is zero
  Unobstructed,  // every point of the previous stage lifts
  Restricted,    // affine consistency conditions eliminated parameters
  Obstructed,    // a constant nonzero condition: empty from this stage
  Conditional,   // nonlinear conditions carried as residual constraints
};

const char* stage_status_name(StageStatus s);

struct TowerStage {
  int index = 0;
  std::size_t slice_dim = 0;        // dim of the kernel slice
  std::size_t num_coordinates = 0;  // invariant stage coordinates
  std::size_t torsor_dim = 0;       // dim of the invariant cocycle torsor
  std::size_t h2_dim = 0;           // dim of invariant H^2 at this stage
  StageStatus status = StageStatus::Trivial;
  std::size_t eliminated_parameters = 0;
  /// Class of the stage defect against the invariant H^2 representatives;
  /// only computed over the rationals when the defect is parameter-free.
  std::optional<Vec> obstruction_class;
};

struct TowerResult {
  SectionVariety variety;
  std::string algebra_name;
  std::size_t algebra_dim = 1;
  std::vector<std::string> algebra_basis;
  int max_stage = 0;
  bool empty = false;
  int empty_from = 0;
  std::vector<TowerStage> stages;
  /// Names of all created parameters (variable id = param_var_base + index);
  /// inactive ones were eliminated by consistency conditions.
  std::vector<std::string> parameter_names;
  std::vector<bool> parameter_active;
  std::size_t param_var_base = 0;
  std::size_t num_parameters = 0;  // active
  /// assignments[i][alpha]: polynomial in the parameters giving component
  /// alpha of coordinate i.  Empty when the variety is empty.
  std::vector<std::vector<Poly>> assignments;
  /// Conditions on parameters that are neither affine nor decidable here.
  std::vector<Poly> residuals;
};

/// Stage-by-stage solution of the section variety over the points of a
/// coefficient algebra, by restriction of scalars to the rationals.  Stage N
/// handles the constraints of weight -N: they are affine in the stage-N
/// unknowns with constant rational coefficients, and polynomial in the
/// parameters of earlier stages.  Consistency conditions are eliminated when
/// affine, declare the variety empty when constant and nonzero, and are
/// reported as residuals otherwise.
TowerResult run_tower(const GradedExtension& ext, int max_stage,
                      const CoefficientAlgebra& algebra);

/// Points of the variety over a coefficient algebra: run_tower to the full
/// kernel depth.
TowerResult evaluate_points(const GradedExtension& ext,
                            const CoefficientAlgebra& algebra);

/// Pointwise stage operations on explicit sections.

/// Bracket defect of a stage-(N-1) graded invariant Lie section, lifted
/// canonically to stage N, as a 2-cochain with values in the stage-N slice.
Cochain stage_defect(const GradedExtension& ext, int stage,
                     const Matrix& previous_section);

struct StageObstruction {
  int stage = 0;
  Cochain defect;
  std::size_t h2_dim = 0;
  bool zero = false;
  Vec class_coordinates;
};

StageObstruction obstruction(const GradedExtension& ext, int stage,
                             const Matrix& previous_section);

struct StageLift {
  StageObstruction obstruction;
  /// Graded invariant Lie section of the stage-N truncation, when the
  /// obstruction vanishes.
  std::optional<Matrix> section;
  /// Torsor directions: corrections (stage-N kernel coordinates x quotient)
  /// that move one lift to another.
  std::vector<Matrix> torsor;
};

StageLift lift_section(const GradedExtension& ext, int stage,
                       const Matrix& previous_section);

}  // namespace nabco
