// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "lie_algebra.hpp"

namespace nabco {

/// Finite group action on the total algebra, kept as raw generator data so
/// validation can report problems instead of throwing.
struct ActionSpec {
  std::vector<Matrix> generators;  // on the total space
  std::vector<unsigned> orders;
};

/// Central object: a graded Lie algebra extension
///   0 -> n -> total -> g -> 0
/// presented by a basis partition of the total algebra into quotient-part and
/// kernel-part elements.  The kernel part must be an ideal concentrated in
/// negative weights; the quotient part carries the grading element in weight 0
/// and is otherwise negative.  The canonical splitting sends a quotient basis
/// element to the total basis element of the same name.
class GradedExtension {
 public:
  GradedExtension(GradedLieAlgebra total, std::vector<std::string> kernel_names,
                  std::optional<ActionSpec> action);

  const GradedLieAlgebra& total() const { return total_; }
  const std::vector<std::size_t>& kernel_indices() const { return kernel_; }
  const std::vector<std::size_t>& quotient_indices() const { return quotient_; }
  const std::optional<ActionSpec>& action() const { return action_; }

  ValidationReport validate() const;
  void ensure_valid() const;

  /// Quotient algebra on the quotient-part basis; meaningful once validation
  /// passes.
  const GradedLieAlgebra& quotient() const { return quotient_algebra_; }

  /// Largest k with a kernel element in weight -k; 0 for an empty kernel.
  int depth() const;

  /// Canonical splitting and projections, as coordinate maps.
  Vec lift(const Vec& quotient_coords) const;
  Vec project_quotient(const Vec& total_coords) const;
  /// Kernel coordinates (length = kernel dimension) of a total vector.
  Vec project_kernel(const Vec& total_coords) const;
  /// Embedding of kernel coordinates into total coordinates.
  Vec embed_kernel(const Vec& kernel_coords) const;

  /// Stage-k truncation: quotient by the kernel part below weight -k.
  /// stage 0 keeps no kernel at all.
  GradedExtension truncated(int stage) const;

  /// Kernel basis positions (indices into kernel_indices()) of weight -stage.
  std::vector<std::size_t> kernel_slice(int stage) const;

  /// The weight -stage kernel slice as a module over the quotient: the
  /// grading element acts by the weight, everything negative acts by zero.
  LieModule slice_module(int stage) const;

  /// Restriction of the action generators to the quotient block.
  std::vector<Matrix> action_on_quotient() const;
  /// Restriction of the action generators to a kernel slice block.
  std::vector<Matrix> action_on_slice(int stage) const;
  /// Paired action for the slice-module cochain complex; nullopt when the
  /// extension carries no action.
  std::optional<ActionPair> slice_action(int stage) const;

 private:
  GradedLieAlgebra total_;
  std::vector<std::string> kernel_names_;
  std::vector<std::size_t> kernel_;
  std::vector<std::size_t> quotient_;
  std::optional<ActionSpec> action_;
  GradedLieAlgebra quotient_algebra_;
};

}  // namespace nabco
