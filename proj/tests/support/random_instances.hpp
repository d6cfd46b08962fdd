// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic randomized instances for property tests: free nilpotent
// algebras with a grading element, modules of several flavors over them,
// extensions with basis-aligned kernels and optional signed involution
// actions, and an independent affine solver for stage lifts.  Every
// generator takes the engine by reference so each test pins its own seed.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "extension.hpp"
#include "free_lie.hpp"
#include "group_action.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "section.hpp"
#include "tower.hpp"
#include "variety.hpp"

namespace nabco::testing {

using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng) {
  return rat(random_int(rng, -4, 4), random_int(rng, 1, 3));
}

inline Rational random_nonzero_rational(Rng& rng) {
  Rational r = random_rational(rng);
  return sgn(r) == 0 ? rat(1) : r;
}

/// Free nilpotent Lie algebra on weighted generators with a grading element
/// adjoined at coordinate 0.  The truncation and the algebra are heap-held so
/// modules keeping raw algebra pointers survive copies of the instance.
struct FreeInstance {
  std::vector<FreeGenerator> generators;
  int depth = 0;
  std::shared_ptr<FreeLieTruncation> free;
  std::shared_ptr<GradedLieAlgebra> algebra;  // with grading element "h"
};

inline FreeInstance make_free_instance(std::vector<FreeGenerator> gens,
                                       int depth) {
  FreeInstance inst;
  inst.generators = std::move(gens);
  inst.depth = depth;
  inst.free = std::make_shared<FreeLieTruncation>(inst.generators, depth);
  inst.algebra = std::make_shared<GradedLieAlgebra>(
      adjoin_grading_element(inst.free->algebra(), "h"));
  return inst;
}

inline FreeInstance random_free_instance(Rng& rng, unsigned max_gens = 3,
                                         int max_depth = 4,
                                         bool mixed_weights = true) {
  unsigned ngens = static_cast<unsigned>(random_int(rng, 2, max_gens));
  std::vector<FreeGenerator> gens;
  for (unsigned i = 0; i < ngens; ++i) {
    int w = -1;
    if (mixed_weights && i + 1 == ngens && random_int(rng, 0, 2) == 0) w = -2;
    gens.push_back({"g" + std::to_string(i + 1), w});
  }
  int depth = static_cast<int>(random_int(rng, 2, max_depth));
  return make_free_instance(std::move(gens), depth);
}

/// A signed involution of the generator set respecting weights, as generator
/// images for induced_endomorphism.  May be the identity.
inline std::vector<Vec> random_signed_involution(Rng& rng,
                                                 const FreeInstance& inst) {
  std::size_t n = inst.generators.size();
  std::vector<std::size_t> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = i;
  // Swap one same-weight pair half of the time.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (inst.generators[i].weight == inst.generators[j].weight)
        pairs.push_back({i, j});
  if (!pairs.empty() && random_int(rng, 0, 1) == 0) {
    auto [i, j] = pairs[static_cast<std::size_t>(
        random_int(rng, 0, static_cast<long>(pairs.size()) - 1))];
    std::swap(pi[i], pi[j]);
  }
  std::vector<Vec> images;
  std::size_t dim = inst.free->algebra().dim();
  for (std::size_t i = 0; i < n; ++i) {
    Rational sign = rat(random_int(rng, 0, 1) == 0 ? 1 : -1);
    if (pi[i] != i) sign = rat(1);  // matched signs keep the square identity
    Vec v = vec_zero(dim);
    v[inst.free->generator_index(static_cast<unsigned>(pi[i]))] = sign;
    images.push_back(std::move(v));
  }
  return images;
}

/// Extends a matrix on the free part to the algebra with the grading element
/// fixed at coordinate 0.
inline Matrix with_grading_block(const Matrix& inner) {
  Matrix m(inner.rows() + 1, inner.cols() + 1);
  m.at(0, 0) = rat(1);
  for (std::size_t i = 0; i < inner.rows(); ++i)
    for (std::size_t j = 0; j < inner.cols(); ++j)
      m.at(i + 1, j + 1) = inner.at(i, j);
  return m;
}

inline Matrix random_involution_matrix(Rng& rng, const FreeInstance& inst) {
  return with_grading_block(
      inst.free->induced_endomorphism(random_signed_involution(rng, inst)));
}

enum class ModuleKind { Adjoint, IdealSlice, TrivialNegative };

/// A validated module over the algebra of `base`, optionally with a paired
/// order-2 action.  The module is heap-held because it keeps a raw pointer to
/// *base.algebra.
struct ModuleInstance {
  FreeInstance base;
  std::shared_ptr<LieModule> module;
  std::optional<ActionPair> action;
  ModuleKind kind = ModuleKind::Adjoint;
};

/// Restriction of the adjoint action to the coordinate span of the basis
/// elements of weight <= -cutoff (an ideal, so the restriction is a module).
inline ModuleInstance ideal_slice_module(FreeInstance base, int cutoff) {
  const GradedLieAlgebra& g = *base.algebra;
  std::vector<std::size_t> members;
  std::vector<BasisElement> mbasis;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.space().weight(i) <= -cutoff) {
      members.push_back(i);
      mbasis.push_back({g.space().name(i), g.space().weight(i)});
    }
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    Matrix m(members.size(), members.size());
    for (std::size_t j = 0; j < members.size(); ++j) {
      Vec br = g.bracket(vec_unit(g.dim(), a), vec_unit(g.dim(), members[j]));
      for (std::size_t i = 0; i < members.size(); ++i) m.at(i, j) = br[members[i]];
    }
    action.push_back(std::move(m));
  }
  ModuleInstance inst;
  inst.base = std::move(base);
  inst.module = std::make_shared<LieModule>(
      inst.base.algebra.get(), GradedVectorSpace(std::move(mbasis)),
      std::move(action));
  inst.kind = ModuleKind::IdealSlice;
  return inst;
}

/// Module with trivial negative action: the grading element acts by weight,
/// everything negative acts by zero.  All weights negative, so it satisfies
/// the preconditions of the degree-one identification.
inline ModuleInstance trivial_negative_module(Rng& rng, FreeInstance base) {
  std::size_t dim = static_cast<std::size_t>(random_int(rng, 1, 4));
  std::vector<BasisElement> mbasis;
  for (std::size_t i = 0; i < dim; ++i)
    mbasis.push_back({"v" + std::to_string(i + 1),
                      static_cast<int>(random_int(rng, -3, -1))});
  GradedVectorSpace space(mbasis);
  const GradedLieAlgebra& g = *base.algebra;
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    Matrix m(dim, dim);
    if (g.space().weight(a) == 0)
      for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = rat(space.weight(i));
    action.push_back(std::move(m));
  }
  ModuleInstance inst;
  inst.base = std::move(base);
  inst.module = std::make_shared<LieModule>(inst.base.algebra.get(),
                                            std::move(space), std::move(action));
  inst.kind = ModuleKind::TrivialNegative;
  return inst;
}

/// Signed permutation of the module basis within weights; order 2.
inline Matrix random_module_involution(Rng& rng, const GradedVectorSpace& space) {
  std::size_t n = space.dim();
  Matrix m(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t partner = i;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!used[j] && space.weight(j) == space.weight(i) &&
          random_int(rng, 0, 2) == 0) {
        partner = j;
        break;
      }
    if (partner != i) {
      used[partner] = true;
      m.at(partner, i) = rat(1);
      m.at(i, partner) = rat(1);
    } else {
      m.at(i, i) = rat(random_int(rng, 0, 1) == 0 ? 1 : -1);
    }
  }
  return m;
}

inline ModuleInstance random_module(Rng& rng, bool with_action,
                                    unsigned max_gens = 2, int max_depth = 3) {
  FreeInstance base = random_free_instance(rng, max_gens, max_depth);
  ModuleInstance inst;
  switch (random_int(rng, 0, 2)) {
    case 0: {
      inst.base = std::move(base);
      inst.module = std::make_shared<LieModule>(adjoint_module(*inst.base.algebra));
      inst.kind = ModuleKind::Adjoint;
      break;
    }
    case 1: {
      int cutoff = static_cast<int>(random_int(rng, 1, base.depth));
      inst = ideal_slice_module(std::move(base), cutoff);
      break;
    }
    default:
      inst = trivial_negative_module(rng, std::move(base));
      break;
  }
  if (with_action) {
    Matrix on_alg = random_involution_matrix(rng, inst.base);
    Matrix on_mod;
    switch (inst.kind) {
      case ModuleKind::Adjoint:
        on_mod = on_alg;
        break;
      case ModuleKind::IdealSlice: {
        // The involution is weight-preserving, so it restricts to the ideal.
        const GradedVectorSpace& as = inst.base.algebra->space();
        const GradedVectorSpace& ms = inst.module->space();
        on_mod = Matrix(ms.dim(), ms.dim());
        for (std::size_t j = 0; j < ms.dim(); ++j)
          for (std::size_t i = 0; i < ms.dim(); ++i)
            on_mod.at(i, j) = on_alg.at(as.index_of(ms.name(i)),
                                        as.index_of(ms.name(j)));
        break;
      }
      case ModuleKind::TrivialNegative:
        on_mod = random_module_involution(rng, inst.module->space());
        break;
    }
    inst.action = ActionPair{{on_alg}, {on_mod}};
  }
  return inst;
}

/// Extension with a basis-aligned kernel: all elements of weight <= -cutoff.
struct ExtensionInstance {
  FreeInstance base;
  std::shared_ptr<GradedExtension> ext;
  int cutoff = 0;
};

inline ExtensionInstance make_extension(FreeInstance base, int cutoff,
                                        std::optional<ActionSpec> action) {
  ExtensionInstance inst;
  inst.base = std::move(base);
  inst.cutoff = cutoff;
  const GradedLieAlgebra& g = *inst.base.algebra;
  std::vector<std::string> kernel_names;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.space().weight(i) <= -cutoff) kernel_names.push_back(g.space().name(i));
  inst.ext = std::make_shared<GradedExtension>(g, std::move(kernel_names),
                                               std::move(action));
  return inst;
}

inline ExtensionInstance random_extension(Rng& rng, bool with_action,
                                          unsigned max_gens = 3,
                                          int max_depth = 4) {
  FreeInstance base = random_free_instance(rng, max_gens, max_depth);
  int depth = base.depth;
  int cutoff = static_cast<int>(random_int(rng, std::max(1, depth - 2), depth));
  std::optional<ActionSpec> action;
  if (with_action)
    action = ActionSpec{{random_involution_matrix(rng, base)}, {2}};
  return make_extension(std::move(base), cutoff, std::move(action));
}

/// Free quotient times a central abelian tail, with the kernel spanned by the
/// tail and, half of the time, the deep free slices as well.  Tail stages are
/// unobstructed with nontrivial torsors while deep free slices genuinely
/// obstruct, so stage walks over these instances see both behaviors.
inline ExtensionInstance random_product_extension(Rng& rng, bool with_action) {
  int depth = static_cast<int>(random_int(rng, 2, 3));
  FreeInstance base = make_free_instance({{"g1", -1}, {"g2", -1}}, depth);
  const GradedLieAlgebra& f = base.free->algebra();
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < f.dim(); ++i)
    basis.push_back({f.space().name(i), f.space().weight(i)});
  std::vector<std::string> kernel_names;
  std::size_t tail = static_cast<std::size_t>(random_int(rng, 1, 3));
  std::vector<int> tail_weights;
  for (std::size_t t = 0; t < tail; ++t) {
    int w = static_cast<int>(random_int(rng, -2, -1));
    std::string name = "a" + std::to_string(t + 1);
    basis.push_back({name, w});
    kernel_names.push_back(name);
    tail_weights.push_back(w);
  }
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = i + 1; j < f.dim(); ++j) {
      Vec br = f.bracket(i, j);
      if (vec_is_zero(br)) continue;
      br.resize(basis.size(), rat(0));
      entries.push_back({i, j, std::move(br)});
    }
  GradedLieAlgebra combined(GradedVectorSpace(std::move(basis)),
                            std::move(entries), std::nullopt);
  GradedLieAlgebra total = adjoin_grading_element(combined, "h");
  int cutoff = depth + 1;  // no free part in the kernel by default
  if (random_int(rng, 0, 1) == 0) {
    cutoff = depth;
    for (std::size_t i = 0; i < f.dim(); ++i)
      if (f.space().weight(i) <= -cutoff)
        kernel_names.push_back(f.space().name(i));
  }
  std::optional<ActionSpec> action;
  if (with_action) {
    Matrix on_free = base.free->induced_endomorphism(
        random_signed_involution(rng, base));
    Matrix inner(f.dim() + tail, f.dim() + tail);
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = 0; j < f.dim(); ++j)
        inner.at(i, j) = on_free.at(i, j);
    GradedVectorSpace tail_space([&] {
      std::vector<BasisElement> tb;
      for (std::size_t t = 0; t < tail; ++t)
        tb.push_back({"a" + std::to_string(t + 1), tail_weights[t]});
      return tb;
    }());
    Matrix on_tail = random_module_involution(rng, tail_space);
    for (std::size_t i = 0; i < tail; ++i)
      for (std::size_t j = 0; j < tail; ++j)
        inner.at(f.dim() + i, f.dim() + j) = on_tail.at(i, j);
    action = ActionSpec{{with_grading_block(inner)}, {2}};
  }
  ExtensionInstance inst;
  inst.base = std::move(base);
  inst.cutoff = cutoff;
  inst.ext = std::make_shared<GradedExtension>(
      std::move(total), std::move(kernel_names), std::move(action));
  return inst;
}

/// Re-presents the extension with the canonical splitting moved by a
/// weight-preserving correction: quotient basis columns become q + phi(q).
/// With an action, `correction` must be invariant so the action matrices
/// carry over unchanged.
inline GradedExtension perturb_splitting(const GradedExtension& ext,
                                         const Matrix& correction) {
  const GradedLieAlgebra& total = ext.total();
  std::size_t n = total.dim();
  Matrix b = Matrix::identity(n);
  const std::vector<std::size_t>& kidx = ext.kernel_indices();
  const std::vector<std::size_t>& qidx = ext.quotient_indices();
  for (std::size_t q = 0; q < qidx.size(); ++q)
    for (std::size_t k = 0; k < kidx.size(); ++k)
      b.at(kidx[k], qidx[q]) = correction.at(k, q);
  Matrix binv = Matrix::identity(n).scaled(rat(2)) - b;  // b - id squares to 0
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = binv.apply(total.bracket(b.column(i), b.column(j)));
      if (!vec_is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  GradedLieAlgebra conj(total.space(), std::move(entries),
                        total.has_grading_element()
                            ? std::optional<std::string>(
                                  total.space().name(*total.grading_element()))
                            : std::nullopt);
  std::vector<std::string> kernel_names;
  for (std::size_t k : kidx) kernel_names.push_back(total.space().name(k));
  return GradedExtension(std::move(conj), std::move(kernel_names), ext.action());
}

/// Transports a graded section of a truncation of `full` into the perturbed
/// presentation: the basis change is the identity on kernel vectors, so the
/// transported section only loses the correction picked up by its quotient
/// block.  `correction` is in full kernel x quotient coordinates.
inline Matrix transport_section(const GradedExtension& full,
                                const GradedExtension& trunc,
                                const Matrix& correction, const Matrix& s) {
  std::map<std::string, std::size_t> kpos;
  for (std::size_t k = 0; k < full.kernel_indices().size(); ++k)
    kpos[full.total().space().name(full.kernel_indices()[k])] = k;
  Matrix out = s;
  const std::vector<std::size_t>& kidx = trunc.kernel_indices();
  const std::vector<std::size_t>& qidx = trunc.quotient_indices();
  for (std::size_t kt = 0; kt < kidx.size(); ++kt) {
    std::size_t kf = kpos.at(trunc.total().space().name(kidx[kt]));
    for (std::size_t q = 0; q < qidx.size(); ++q) {
      const Rational& c = correction.at(kf, q);
      if (sgn(c) == 0) continue;
      for (std::size_t col = 0; col < s.cols(); ++col)
        out.at(kidx[kt], col) -= c * s.at(qidx[q], col);
    }
  }
  return out;
}

/// Random correction in the span of the variety coordinates (hence invariant
/// and weight-preserving).
inline Matrix random_variety_correction(Rng& rng, const GradedExtension& ext,
                                        const SectionVariety& variety) {
  Matrix corr(ext.kernel_indices().size(), ext.quotient().dim());
  for (const VarietyCoordinate& c : variety.coordinates)
    corr = corr + c.map.scaled(random_rational(rng));
  return corr;
}

/// Graded invariant Lie section from the tower parametrization at random
/// parameter values; nullopt when the variety is empty, has residual
/// constraints, or the tower left coordinates beyond its depth unresolved.
inline std::optional<Matrix> random_tower_section(Rng& rng,
                                                  const GradedExtension& ext,
                                                  const SectionVariety& variety,
                                                  const TowerResult& tower) {
  if (tower.empty || !tower.residuals.empty()) return std::nullopt;
  std::map<unsigned, Rational> point;
  for (std::size_t p = 0; p < tower.parameter_names.size(); ++p)
    point[static_cast<unsigned>(tower.param_var_base + p)] =
        random_rational(rng);
  Vec values;
  for (const std::vector<Poly>& comps : tower.assignments)
    values.push_back(comps.at(0).evaluate(point));
  if (!satisfies_constraints(variety, values)) return std::nullopt;
  return section_at(ext, variety, values);
}

/// Independent affine stage solver: evaluates the bracket defect of
/// `lifted + correction` directly through the Lie bracket (never through the
/// cochain differential) and solves for corrections killing it.  The defect
/// of a section is affine in a deepest-slice correction because slice-slice
/// brackets fall below the truncation.
struct DirectLift {
  bool solvable = false;
  std::vector<Matrix> basis;      // correction directions (slice x quotient)
  std::optional<Vec> particular;  // coefficients over basis
  std::vector<Vec> homogeneous;   // kernel of the system, over basis
  Matrix lifted;                  // the canonical lift of prev
  std::shared_ptr<GradedExtension> cur;
};

inline Matrix embed_slice_correction(const GradedExtension& cur, int stage,
                                     const Matrix& lifted, const Matrix& corr) {
  std::vector<std::size_t> slice = cur.kernel_slice(stage);
  Matrix s = lifted;
  for (std::size_t m = 0; m < slice.size(); ++m)
    for (std::size_t q = 0; q < corr.cols(); ++q)
      s.at(cur.kernel_indices()[slice[m]], q) += corr.at(m, q);
  return s;
}

inline DirectLift direct_stage_solve(const GradedExtension& ext, int stage,
                                     const Matrix& prev) {
  DirectLift out;
  out.cur = std::make_shared<GradedExtension>(ext.truncated(stage));
  const GradedExtension& cur = *out.cur;
  const GradedLieAlgebra& total = cur.total();
  const GradedLieAlgebra& g = cur.quotient();
  GradedExtension prev_ext = ext.truncated(stage - 1);
  Matrix embed(total.dim(), prev_ext.total().dim());
  for (std::size_t j = 0; j < prev_ext.total().dim(); ++j)
    embed.at(total.space().index_of(prev_ext.total().space().name(j)), j) =
        rat(1);
  out.lifted = embed * prev;
  std::vector<std::size_t> slice = cur.kernel_slice(stage);
  // Correction directions: weight-matched pairs, or their invariant combos.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (slice m, q)
  for (std::size_t m = 0; m < slice.size(); ++m)
    for (std::size_t q = 0; q < g.dim(); ++q)
      if (g.space().weight(q) == -stage) pairs.push_back({m, q});
  std::vector<Vec> combo_basis;
  if (ext.action()) {
    std::vector<Matrix> act_s = cur.action_on_slice(stage);
    std::vector<Matrix> act_q = cur.action_on_quotient();
    std::vector<Matrix> gens;
    for (std::size_t gi = 0; gi < act_q.size(); ++gi) {
      Matrix inv = invert(act_q[gi]);
      Matrix rep(pairs.size(), pairs.size());
      for (std::size_t pd = 0; pd < pairs.size(); ++pd)
        for (std::size_t ps = 0; ps < pairs.size(); ++ps)
          rep.at(pd, ps) = act_s[gi].at(pairs[pd].first, pairs[ps].first) *
                           inv.at(pairs[ps].second, pairs[pd].second);
      gens.push_back(std::move(rep));
    }
    combo_basis = invariant_subspace_of(gens, pairs.size());
  } else {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      combo_basis.push_back(vec_unit(pairs.size(), p));
  }
  for (const Vec& b : combo_basis) {
    Matrix corr(slice.size(), g.dim());
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (sgn(b[p]) != 0) corr.at(pairs[p].first, pairs[p].second) = b[p];
    out.basis.push_back(std::move(corr));
  }
  auto defect_of = [&](const Matrix& s) {
    Vec d;
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t bq = a + 1; bq < g.dim(); ++bq) {
        Vec h = total.bracket(s.column(a), s.column(bq));
        h = vec_sub(h, s.apply(g.bracket(a, bq)));
        Vec hk = cur.project_kernel(h);
        for (std::size_t m = 0; m < slice.size(); ++m) d.push_back(hk[slice[m]]);
      }
    return d;
  };
  Vec d0 = defect_of(out.lifted);
  Matrix system(d0.size(), out.basis.size());
  for (std::size_t u = 0; u < out.basis.size(); ++u) {
    Vec du = defect_of(embed_slice_correction(cur, stage, out.lifted,
                                              out.basis[u]));
    for (std::size_t r = 0; r < d0.size(); ++r)
      system.at(r, u) = du[r] - d0[r];
  }
  auto sol = solve_affine(system, vec_scale(rat(-1), d0));
  if (sol) {
    out.solvable = true;
    out.particular = sol->particular;
    out.homogeneous = sol->kernel;
  }
  return out;
}

inline Matrix combine_corrections(const std::vector<Matrix>& basis,
                                  const Vec& coeffs) {
  Matrix out = basis.empty() ? Matrix(0, 0)
                             : Matrix(basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    out = out + basis[i].scaled(coeffs[i]);
  return out;
}

/// Slice-coordinate cochain values of a correction matrix, matching the
/// convention of the degree-1 weight-0 slice.
inline Vec correction_to_cochain(const CochainSlice& s1, const Matrix& corr) {
  Vec v = vec_zero(s1.dim());
  for (std::size_t pos = 0; pos < s1.coords.size(); ++pos) {
    auto [tpos, m] = s1.coords[pos];
    v[pos] = corr.at(m, s1.tuples[tpos].idx[0]);
  }
  return v;
}

}  // namespace nabco::testing
