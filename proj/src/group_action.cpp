// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "group_action.hpp"

#include <algorithm>

#include "error.hpp"

namespace nabco {

FiniteGroupAction::FiniteGroupAction(const GradedVectorSpace& space,
                                     std::vector<Matrix> generators,
                                     std::vector<unsigned> declared_orders)
    : generators_(std::move(generators)), orders_(std::move(declared_orders)) {
  if (generators_.size() != orders_.size())
    throw InputError("group action: one order per generator required");
  std::size_t n = space.dim();
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const Matrix& m = generators_[g];
    if (m.rows() != n || m.cols() != n)
      throw InputError("group generator " + std::to_string(g) +
                       ": matrix shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(m.at(i, j)) != 0 && space.weight(i) != space.weight(j))
          throw InputError("group generator " + std::to_string(g) +
                           " does not preserve weight at (" + space.name(i) +
                           ", " + space.name(j) + ")");
    if (orders_[g] == 0)
      throw InputError("group generator " + std::to_string(g) +
                       ": order must be positive");
    Matrix p = Matrix::identity(n);
    for (unsigned k = 0; k < orders_[g]; ++k) p = p * m;
    if (!p.is_identity())
      throw InputError("group generator " + std::to_string(g) +
                       " does not have the declared order " +
                       std::to_string(orders_[g]));
  }
  // Breadth-first closure; identity first.  Declared orders certify
  // invertibility, so this terminates iff the group is finite, and the cap
  // turns a runaway closure into an input error.
  elements_.push_back(Matrix::identity(n));
  std::size_t next = 0;
  while (next < elements_.size()) {
    Matrix base = elements_[next];
    ++next;
    for (const Matrix& g : generators_) {
      Matrix prod = base * g;
      if (std::find(elements_.begin(), elements_.end(), prod) ==
          elements_.end()) {
        elements_.push_back(std::move(prod));
        if (elements_.size() > kMaxOrder)
          throw InputError("group closure exceeds " +
                           std::to_string(kMaxOrder) + " elements");
      }
    }
  }
}

FiniteGroupAction FiniteGroupAction::trivial(const GradedVectorSpace& space) {
  return FiniteGroupAction(space, {}, {});
}

Vec FiniteGroupAction::reynolds(const Vec& v) const {
  return reynolds_of(elements_, v);
}

std::vector<Vec> FiniteGroupAction::invariant_subspace() const {
  std::size_t n = elements_[0].rows();
  return invariant_subspace_of(generators_, n);
}

std::vector<Vec> invariant_subspace_of(const std::vector<Matrix>& generators,
                                       std::size_t dim) {
  if (generators.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(vec_unit(dim, i));
    return all;
  }
  Matrix stacked(generators.size() * dim, dim);
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        stacked.at(g * dim + i, j) =
            generators[g].at(i, j) - Rational(i == j ? 1 : 0);
  return kernel_image(stacked).kernel;
}

Vec reynolds_of(const std::vector<Matrix>& elements, const Vec& v) {
  if (elements.empty()) throw ComputeError("reynolds over empty element list");
  Vec sum = vec_zero(v.size());
  for (const Matrix& g : elements) sum = vec_add(sum, g.apply(v));
  return vec_scale(rat(1, static_cast<long>(elements.size())), sum);
}

}  // namespace nabco
