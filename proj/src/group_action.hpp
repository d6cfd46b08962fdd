// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "graded_space.hpp"
#include "matrix.hpp"

namespace nabco {

/// Action of a finite group on a graded space, given by generator matrices
/// with declared orders.  The group is the matrix group the generators
/// generate; the constructor closes it by breadth-first products and caps the
/// size.  Generators must be weight-preserving and satisfy g^order = id.
class FiniteGroupAction {
 public:
  static constexpr std::size_t kMaxOrder = 1024;

  FiniteGroupAction(const GradedVectorSpace& space,
                    std::vector<Matrix> generators,
                    std::vector<unsigned> declared_orders);

  static FiniteGroupAction trivial(const GradedVectorSpace& space);

  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& generators() const { return generators_; }
  const std::vector<unsigned>& declared_orders() const { return orders_; }
  /// All group elements; identity first, then breadth-first products of
  /// generators in declaration order.
  const std::vector<Matrix>& elements() const { return elements_; }

  /// Group average (1/|G|) sum over elements.
  Vec reynolds(const Vec& v) const;

  /// Echelon basis of the fixed subspace, computed as the exact kernel of the
  /// stacked maps (g - id) over the generators.
  std::vector<Vec> invariant_subspace() const;

 private:
  std::vector<Matrix> generators_;
  std::vector<unsigned> orders_;
  std::vector<Matrix> elements_;
};

/// Fixed subspace of an arbitrary representation given by generator matrices.
std::vector<Vec> invariant_subspace_of(const std::vector<Matrix>& generators,
                                       std::size_t dim);

/// Group average for a representation given by the full element list.
Vec reynolds_of(const std::vector<Matrix>& elements, const Vec& v);

}  // namespace nabco
