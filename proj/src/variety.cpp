// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "variety.hpp"

#include "error.hpp"
#include "group_action.hpp"

namespace nabco {

SectionVariety section_variety(const GradedExtension& ext) {
  ext.ensure_valid();
  const GradedLieAlgebra& total = ext.total();
  const GradedLieAlgebra& g = ext.quotient();
  std::size_t qdim = g.dim();
  std::size_t kdim = ext.kernel_indices().size();
  SectionVariety variety;
  // Weight blocks of the pair space, from -1 downward.
  int depth = ext.depth();
  std::vector<Matrix> act_q = ext.action_on_quotient();
  std::vector<Matrix> act_q_inv;
  std::vector<Matrix> act_k;
  if (ext.action()) {
    for (const Matrix& m : act_q) act_q_inv.push_back(invert(m));
    const std::vector<std::size_t>& kidx = ext.kernel_indices();
    for (const Matrix& m : ext.action()->generators) {
      Matrix block(kdim, kdim);
      for (std::size_t i = 0; i < kdim; ++i)
        for (std::size_t j = 0; j < kdim; ++j)
          block.at(i, j) = m.at(kidx[i], kidx[j]);
      act_k.push_back(std::move(block));
    }
  }
  for (int w = -1; w >= -depth; --w) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (quotient, kernel)
    for (std::size_t q = 0; q < qdim; ++q) {
      if (g.space().weight(q) != w) continue;
      for (std::size_t k = 0; k < kdim; ++k)
        if (total.space().weight(ext.kernel_indices()[k]) == w)
          pairs.push_back({q, k});
    }
    if (pairs.empty()) continue;
    std::vector<Vec> basis;
    if (!ext.action() || act_q.empty()) {
      for (std::size_t p = 0; p < pairs.size(); ++p)
        basis.push_back(vec_unit(pairs.size(), p));
    } else {
      // g . F = B F A^{-1} on correction maps F.
      std::vector<Matrix> gens;
      for (std::size_t gi = 0; gi < act_q.size(); ++gi) {
        Matrix m(pairs.size(), pairs.size());
        for (std::size_t pd = 0; pd < pairs.size(); ++pd)
          for (std::size_t ps = 0; ps < pairs.size(); ++ps) {
            auto [qd, kd] = pairs[pd];
            auto [qs, ks] = pairs[ps];
            m.at(pd, ps) = act_k[gi].at(kd, ks) * act_q_inv[gi].at(qs, qd);
          }
        gens.push_back(std::move(m));
      }
      basis = invariant_subspace_of(gens, pairs.size());
    }
    for (const Vec& b : basis) {
      VarietyCoordinate coord;
      coord.name = "c" + std::to_string(variety.coordinates.size() + 1);
      coord.weight = w;
      coord.stage = -w;
      coord.map = Matrix(kdim, qdim);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (sgn(b[p]) == 0) continue;
        auto [q, k] = pairs[p];
        coord.map.at(k, q) = b[p];
      }
      variety.coordinates.push_back(std::move(coord));
    }
  }
  // Symbolic section: S(q) over total coordinates with polynomial entries.
  std::size_t tdim = total.dim();
  std::vector<std::vector<Poly>> sym(qdim, std::vector<Poly>(tdim));
  for (std::size_t q = 0; q < qdim; ++q) {
    sym[q][ext.quotient_indices()[q]] = Poly::constant(Rational(1));
    for (std::size_t ci = 0; ci < variety.coordinates.size(); ++ci) {
      const Matrix& map = variety.coordinates[ci].map;
      for (std::size_t k = 0; k < kdim; ++k)
        if (sgn(map.at(k, q)) != 0)
          sym[q][ext.kernel_indices()[k]] = sym[q][ext.kernel_indices()[k]] +
              Poly::variable(static_cast<unsigned>(ci)).scaled(map.at(k, q));
    }
  }
  // Defect polynomials over quotient basis pairs.
  for (std::size_t a = 0; a < qdim; ++a)
    for (std::size_t b = a + 1; b < qdim; ++b) {
      std::vector<Poly> defect(tdim);
      for (std::size_t i = 0; i < tdim; ++i) {
        if (sym[a][i].is_zero()) continue;
        for (std::size_t j = 0; j < tdim; ++j) {
          if (sym[b][j].is_zero()) continue;
          const Vec& br = total.bracket(i, j);
          if (vec_is_zero(br)) continue;
          Poly prod = sym[a][i] * sym[b][j];
          for (std::size_t t = 0; t < tdim; ++t)
            if (sgn(br[t]) != 0) defect[t] = defect[t] + prod.scaled(br[t]);
        }
      }
      Vec gb = g.bracket(a, b);
      for (std::size_t q = 0; q < qdim; ++q) {
        if (sgn(gb[q]) == 0) continue;
        for (std::size_t t = 0; t < tdim; ++t)
          if (!sym[q][t].is_zero())
            defect[t] = defect[t] - sym[q][t].scaled(gb[q]);
      }
      for (std::size_t q : ext.quotient_indices())
        if (!defect[q].is_zero())
          throw ComputeError("defect has a quotient component at " +
                             total.space().name(q));
      for (std::size_t k = 0; k < kdim; ++k) {
        const Poly& p = defect[ext.kernel_indices()[k]];
        if (p.is_zero()) continue;
        VarietyConstraint c;
        c.a = a;
        c.b = b;
        c.target = k;
        c.weight = total.space().weight(ext.kernel_indices()[k]);
        c.poly = p;
        variety.constraints.push_back(std::move(c));
      }
    }
  return variety;
}

Matrix section_at(const GradedExtension& ext, const SectionVariety& variety,
                  const Vec& values) {
  if (values.size() != variety.coordinates.size())
    throw InputError("one value per variety coordinate required");
  Matrix correction(ext.kernel_indices().size(), ext.quotient().dim());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (sgn(values[i]) != 0)
      correction = correction + variety.coordinates[i].map.scaled(values[i]);
  return section_from_correction(ext, correction);
}

bool satisfies_constraints(const SectionVariety& variety, const Vec& values) {
  std::map<unsigned, Rational> point;
  for (std::size_t i = 0; i < values.size(); ++i)
    point[static_cast<unsigned>(i)] = values[i];
  for (const VarietyConstraint& c : variety.constraints)
    if (sgn(c.poly.evaluate(point)) != 0) return false;
  return true;
}

}  // namespace nabco
