// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lie_algebra.hpp"

namespace nabco {

/// Weight-homogeneous alternating cochain, stored as coordinates on a slice.
struct Cochain {
  unsigned degree = 0;
  int weight = 0;
  Vec values;
};

/// Basis bookkeeping for the degree-j, weight-m cochains: pairs of a wedge
/// tuple T and a module basis element v with weight(v) - weight(T) = m.
struct CochainSlice {
  unsigned degree = 0;
  int weight = 0;
  std::vector<WedgeTuple> tuples;  // tuples carrying at least one coordinate
  std::map<std::vector<std::size_t>, std::size_t> tuple_pos;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_tuple;
  std::vector<std::pair<std::size_t, std::size_t>> coords;  // (tuple pos, module idx)
  std::size_t dim() const { return coords.size(); }
};

/// Finite group acting compatibly on the algebra and on a module, given by
/// paired generator matrices (same abstract generator order).
struct ActionPair {
  std::vector<Matrix> on_algebra;
  std::vector<Matrix> on_module;
};

struct CohomologyData {
  unsigned degree = 0;
  int weight = 0;
  bool invariant = false;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t dim = 0;
  /// Deterministic class representatives in slice coordinates: kernel special
  /// solutions reduced against the coboundary span, in order, nonzero ones
  /// kept.
  std::vector<Cochain> representatives;
  /// Basis of the cocycle space in slice coordinates (restricted to the
  /// invariant subcomplex when invariant is set).
  std::vector<Vec> cocycle_basis;
};

/// Chevalley-Eilenberg complex of a module in a fixed weight, sliced by
/// degree.  The differential convention, fixed once here and relied on
/// everywhere:
///
///   (d c)(x_0, ..., x_j) =   sum_i (-1)^i x_i . c(..., x_i omitted, ...)
///                          + sum_{i<k} (-1)^{i+k} c([x_i, x_k], ..., x_i, x_k omitted, ...)
class CochainComplex {
 public:
  explicit CochainComplex(const LieModule& module,
                          std::optional<ActionPair> action = std::nullopt);

  const LieModule& module() const { return *module_; }
  bool has_action() const { return action_.has_value(); }
  const ActionPair& action() const { return *action_; }

  CochainSlice slice(unsigned degree, int weight) const;

  Cochain apply_d(const Cochain& c) const;
  Matrix differential(unsigned degree, int weight) const;

  /// Matrices of the generators acting on a slice by
  /// (g . c)(x) = g . c(g^{-1} x).
  std::vector<Matrix> action_on_slice(unsigned degree, int weight) const;
  /// Echelon basis of the invariant cochains of a slice.
  std::vector<Vec> invariant_slice_basis(unsigned degree, int weight) const;

  CohomologyData cohomology(unsigned degree, int weight, bool invariant) const;

  /// Primitive of a cocycle under d, if one exists; with invariant set the
  /// primitive is searched in the invariant subcomplex and the input must be
  /// invariant.
  std::optional<Cochain> primitive(const Cochain& z, bool invariant) const;

  /// Coordinates of the class of z against data.representatives; z must be a
  /// cocycle of the matching slice lying in the span of the representatives
  /// and the coboundaries.
  Vec class_coordinates(const Cochain& z, const CohomologyData& data) const;

 private:
  const LieModule* module_;  // not owned; must outlive
  std::optional<ActionPair> action_;

  Vec value_at(const CochainSlice& s, const Cochain& c,
               const std::vector<std::size_t>& sorted_tuple) const;
  /// Differential restricted to the invariant subcomplex: returns the
  /// matrix in invariant coordinates together with the two invariant bases.
  Matrix restricted_differential(unsigned degree, int weight,
                                 const std::vector<Vec>& domain_inv,
                                 const std::vector<Vec>& target_inv) const;
};

/// Identification data between H^1 in weight 0 with coefficients in V and the
/// weight-preserving (equivariant) maps from the abelianization of the
/// negative part into V.  Requires V to have no weight-0 component and the
/// negative part of the algebra to act trivially on V.
struct HomIdentification {
  std::size_t h1_dim = 0;   // dim H^1_(0)(g, V), invariant when action given
  std::size_t hom_dim = 0;  // dim weight-preserving equivariant Hom(H_1, V)
  std::vector<std::size_t> h1_rep_indices;  // algebra basis indices
  Matrix restriction;  // hom coordinates x cohomology representatives
  bool injective = false;
  bool surjective = false;
};

HomIdentification hom_identification(const LieModule& module,
                                     const std::optional<ActionPair>& action);

}  // namespace nabco
