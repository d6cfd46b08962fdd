// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace nabco {

struct BasisElement {
  std::string name;
  int weight = 0;
};

/// Finite-dimensional vector space with a named, weighted basis.  Declaration
/// order is the coordinate order; every downstream computation inherits its
/// determinism from that.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(std::vector<BasisElement> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  int weight(std::size_t i) const { return basis_[i].weight; }
  const std::vector<BasisElement>& basis() const { return basis_; }

  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // InputError if absent

  /// Indices of the weight-m graded component, increasing.
  std::vector<std::size_t> component(int m) const;
  /// Distinct weights present, decreasing (top weight first).
  std::vector<int> weights() const;
  int min_weight() const;  // InputError on the zero space

  /// The weight of a homogeneous vector; nullopt for zero or mixed vectors.
  std::optional<int> homogeneous_weight(const Vec& v) const;

  /// Coordinate string "2 x + 1/3 y" for reports; "0" for the zero vector.
  std::string describe(const Vec& v) const;

 private:
  std::vector<BasisElement> basis_;
  std::map<std::string, std::size_t> index_;
};

/// Linear map between graded spaces shifting weight by a fixed amount:
/// a vector of weight w maps into weight w + shift.
struct GradedMap {
  int shift = 0;
  Matrix mat;  // target dim x source dim
};

/// Checks homogeneity of the matrix against the two gradings; InputError on a
/// violating entry.
GradedMap make_graded_map(const GradedVectorSpace& source,
                          const GradedVectorSpace& target, int shift,
                          Matrix mat);

/// Composition g after f; shifts add.
GradedMap compose(const GradedVectorSpace& source,
                  const GradedVectorSpace& middle,
                  const GradedVectorSpace& target, const GradedMap& f,
                  const GradedMap& g);

/// Truncation quotient: kills basis elements of weight <= -(cutoff + 1),
/// keeping those of weight >= -cutoff in declaration order.
struct WeightTruncation {
  int cutoff = 0;
  GradedVectorSpace quotient;
  std::vector<std::size_t> kept;  // original index per quotient coordinate
  GradedMap projection;           // shift 0, surjective
};

WeightTruncation truncate(const GradedVectorSpace& space, int cutoff);

/// Basis tuple of an exterior power: strictly increasing indices.
struct WedgeTuple {
  std::vector<std::size_t> idx;
  int weight = 0;
};

/// All degree-j wedge tuples in lexicographic order on index tuples; the
/// weight of a tuple is the sum of its entries' weights.
std::vector<WedgeTuple> exterior_basis(const GradedVectorSpace& space,
                                       unsigned degree);

/// Sorts indices into strictly increasing order, returning the permutation
/// sign, or 0 if two indices coincide.
int sort_tuple(std::vector<std::size_t>& idx);

}  // namespace nabco
