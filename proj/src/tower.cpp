// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "tower.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace nabco {

const char* stage_status_name(StageStatus s) {
  switch (s) {
    case StageStatus::Trivial: return "trivial";
    case StageStatus::Unobstructed: return "unobstructed";
    case StageStatus::Restricted: return "restricted";
    case StageStatus::Obstructed: return "obstructed";
    case StageStatus::Conditional: return "conditional";
  }
  return "unknown";
}

namespace {

/// Algebra-valued polynomial: one rational polynomial per algebra component.
using APoly = std::vector<Poly>;

APoly apoly_zero(std::size_t dim) { return APoly(dim); }

APoly apoly_scalar(const CoefficientAlgebra& a, const Rational& c) {
  APoly out(a.dim());
  const Vec& unit = a.unit();
  for (std::size_t i = 0; i < a.dim(); ++i)
    out[i] = Poly::constant(c * unit[i]);
  return out;
}

APoly apoly_mul(const CoefficientAlgebra& a, const APoly& p, const APoly& q) {
  APoly out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (q[j].is_zero()) continue;
      Poly prod = p[i] * q[j];
      const Vec& t = a.table(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (sgn(t[k]) != 0) out[k] = out[k] + prod.scaled(t[k]);
    }
  }
  return out;
}

void apoly_add_to(APoly& acc, const APoly& p) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + p[i];
}

/// Expands a constraint polynomial in the coordinates into component
/// polynomials in the scalar unknowns X_{i, alpha} (variable i * dim + alpha).
APoly expand_constraint(const CoefficientAlgebra& a, const Poly& p) {
  std::size_t dim = a.dim();
  APoly total = apoly_zero(dim);
  for (const auto& [mono, coeff] : p.terms()) {
    APoly acc = apoly_scalar(a, coeff);
    for (const auto& [var, exp] : mono) {
      APoly x(dim);
      for (std::size_t alpha = 0; alpha < dim; ++alpha)
        x[alpha] = Poly::variable(static_cast<unsigned>(var * dim + alpha));
      for (unsigned e = 0; e < exp; ++e) acc = apoly_mul(a, acc, x);
    }
    apoly_add_to(total, acc);
  }
  return total;
}

struct StageRow {
  Vec coeffs;  // over the stage unknowns
  Poly rest;   // parameter part; the row reads coeffs . x + rest = 0
};

}  // namespace

TowerResult run_tower(const GradedExtension& ext, int max_stage,
                      const CoefficientAlgebra& algebra) {
  ext.ensure_valid();
  if (max_stage < 0) throw InputError("max stage must be >= 0");
  TowerResult result;
  result.variety = section_variety(ext);
  result.algebra_name = algebra.name();
  result.algebra_dim = algebra.dim();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    result.algebra_basis.push_back(algebra.basis_name(i));
  result.max_stage = max_stage;
  std::size_t da = algebra.dim();
  std::size_t ncoords = result.variety.coordinates.size();
  result.param_var_base = ncoords * da;
  // Component expansion of every constraint, grouped by stage.
  struct ExpandedRow {
    int stage;
    std::size_t constraint;
    std::size_t component;
    Poly poly;
  };
  std::vector<ExpandedRow> rows;
  for (std::size_t ci = 0; ci < result.variety.constraints.size(); ++ci) {
    const VarietyConstraint& c = result.variety.constraints[ci];
    APoly comps = expand_constraint(algebra, c.poly);
    for (std::size_t alpha = 0; alpha < da; ++alpha)
      if (!comps[alpha].is_zero())
        rows.push_back({-c.weight, ci, alpha, std::move(comps[alpha])});
  }
  std::map<unsigned, Poly> assign;
  auto substitute_everywhere = [&](unsigned var, const Poly& repl) {
    for (auto& [v, p] : assign) p = p.substitute(var, repl);
    for (ExpandedRow& r : rows) r.poly = r.poly.substitute(var, repl);
    for (Poly& p : result.residuals) p = p.substitute(var, repl);
    assign[var] = repl;
  };
  for (int stage = 1; stage <= max_stage && !result.empty; ++stage) {
    TowerStage st;
    st.index = stage;
    st.slice_dim = ext.kernel_slice(stage).size();
    for (const VarietyCoordinate& c : result.variety.coordinates)
      if (c.stage == stage) ++st.num_coordinates;
    LieModule module = ext.slice_module(stage);
    CochainComplex complex(module, ext.slice_action(stage));
    bool invariant = ext.action().has_value();
    CohomologyData h1;
    CohomologyData h2;
    if (st.slice_dim > 0) {
      h1 = complex.cohomology(1, 0, invariant);
      h2 = complex.cohomology(2, 0, invariant);
      st.torsor_dim = h1.dim;
      st.h2_dim = h2.dim;
      if (h1.coboundary_dim != 0)
        throw ComputeError("weight-0 1-coboundaries on a negative slice");
    }
    // Stage unknowns, ascending variable ids.
    std::vector<unsigned> stage_vars;
    for (std::size_t i = 0; i < ncoords; ++i)
      if (result.variety.coordinates[i].stage == stage)
        for (std::size_t alpha = 0; alpha < da; ++alpha)
          stage_vars.push_back(static_cast<unsigned>(i * da + alpha));
    std::set<unsigned> stage_set(stage_vars.begin(), stage_vars.end());
    // Collect and split this stage's rows.
    std::vector<StageRow> srows;
    bool parameter_free = true;
    for (const ExpandedRow& r : rows) {
      if (r.stage != stage) continue;
      Poly p = r.poly.substitute_all(assign);
      StageRow sr;
      sr.coeffs = vec_zero(stage_vars.size());
      for (const auto& [mono, coeff] : p.terms()) {
        bool stage_term = false;
        for (const auto& [v, e] : mono)
          if (stage_set.count(v)) {
            if (mono.size() != 1 || e != 1)
              throw ComputeError(
                  "stage unknown appears nonlinearly in its own stage");
            stage_term = true;
          }
        if (stage_term) {
          unsigned v = mono[0].first;
          std::size_t pos = std::lower_bound(stage_vars.begin(),
                                             stage_vars.end(), v) -
                            stage_vars.begin();
          sr.coeffs[pos] += coeff;
        } else {
          sr.rest.add_term(mono, coeff);
        }
      }
      if (!sr.rest.is_constant()) parameter_free = false;
      srows.push_back(std::move(sr));
    }
    // Parameter-free rational defect: record its cohomology class.
    if (parameter_free && st.slice_dim > 0 && da == 1) {
      CochainSlice s2 = complex.slice(2, 0);
      Cochain defect{2, 0, vec_zero(s2.dim())};
      std::vector<std::size_t> slice_members = ext.kernel_slice(stage);
      for (const ExpandedRow& r : rows) {
        if (r.stage != stage) continue;
        const VarietyConstraint& c = result.variety.constraints[r.constraint];
        Poly p = r.poly.substitute_all(assign);
        Rational value = p.constant_term();
        if (sgn(value) == 0) continue;
        auto member = std::find(slice_members.begin(), slice_members.end(),
                                c.target);
        if (member == slice_members.end())
          throw ComputeError("constraint target outside its stage slice");
        std::vector<std::size_t> tup{c.a, c.b};
        auto it = s2.tuple_pos.find(tup);
        if (it == s2.tuple_pos.end())
          throw ComputeError("defect tuple outside the weight-0 slice");
        std::size_t m = member - slice_members.begin();
        for (auto& [vm, pos] : s2.by_tuple[it->second])
          if (vm == m) defect.values[pos] = value;
      }
      if (!vec_is_zero(complex.apply_d(defect).values))
        throw ComputeError("stage defect is not a cocycle");
      st.obstruction_class = complex.class_coordinates(defect, h2);
    }
    // Eliminate the stage unknowns.
    std::size_t pivot_rows = 0;
    std::vector<std::size_t> pivot_col_of_row;
    for (std::size_t col = 0; col < stage_vars.size(); ++col) {
      std::size_t sel = pivot_rows;
      while (sel < srows.size() && sgn(srows[sel].coeffs[col]) == 0) ++sel;
      if (sel == srows.size()) continue;
      std::swap(srows[pivot_rows], srows[sel]);
      Rational inv = 1 / srows[pivot_rows].coeffs[col];
      for (Rational& x : srows[pivot_rows].coeffs) x *= inv;
      srows[pivot_rows].rest = srows[pivot_rows].rest.scaled(inv);
      for (std::size_t r = 0; r < srows.size(); ++r) {
        if (r == pivot_rows) continue;
        Rational f = srows[r].coeffs[col];
        if (sgn(f) == 0) continue;
        vec_axpy(srows[r].coeffs, -f, srows[pivot_rows].coeffs);
        srows[r].rest = srows[r].rest - srows[pivot_rows].rest.scaled(f);
      }
      pivot_col_of_row.push_back(col);
      ++pivot_rows;
    }
    // Consistency conditions: rows with no stage part left.
    std::vector<Poly> pending;
    for (std::size_t r = pivot_rows; r < srows.size(); ++r)
      if (!srows[r].rest.is_zero()) pending.push_back(srows[r].rest);
    bool conditional = false;
    while (!pending.empty()) {
      for (Poly& p : pending) p = p.substitute_all(assign);
      pending.erase(std::remove_if(pending.begin(), pending.end(),
                                   [](const Poly& p) { return p.is_zero(); }),
                    pending.end());
      bool changed = false;
      for (std::size_t pi = 0; pi < pending.size(); ++pi) {
        const Poly& p = pending[pi];
        if (p.is_constant()) {
          result.empty = true;
          result.empty_from = stage;
          st.status = StageStatus::Obstructed;
          break;
        }
        auto aff = p.as_affine();
        if (!aff) continue;
        auto lead = aff->linear.begin();
        unsigned var = lead->first;
        Rational coeff = lead->second;
        Poly repl = Poly::constant(aff->constant).scaled(-1 / coeff);
        for (auto it = std::next(lead); it != aff->linear.end(); ++it)
          repl = repl +
                 Poly::variable(it->first).scaled(-(it->second) / coeff);
        substitute_everywhere(var, repl);
        if (var >= result.param_var_base)
          result.parameter_active[var - result.param_var_base] = false;
        ++st.eliminated_parameters;
        for (StageRow& sr : srows) sr.rest = sr.rest.substitute_all(assign);
        pending.erase(pending.begin() + pi);
        changed = true;
        break;
      }
      if (result.empty) break;
      if (!changed) {
        // Everything left is nonlinear: carry as residuals.
        for (Poly& p : pending) result.residuals.push_back(std::move(p));
        pending.clear();
        conditional = true;
      }
    }
    if (result.empty) {
      result.stages.push_back(st);
      break;
    }
    // Back-substitution: free stage unknowns become parameters, pivots get
    // expressions.
    std::set<std::size_t> pivot_cols(pivot_col_of_row.begin(),
                                     pivot_col_of_row.end());
    for (std::size_t col = 0; col < stage_vars.size(); ++col) {
      if (pivot_cols.count(col)) continue;
      std::string name = "t" + std::to_string(result.parameter_names.size() + 1);
      unsigned pid = static_cast<unsigned>(result.param_var_base +
                                           result.parameter_names.size());
      result.parameter_names.push_back(name);
      result.parameter_active.push_back(true);
      assign[stage_vars[col]] = Poly::variable(pid);
    }
    for (std::size_t r = 0; r < pivot_rows; ++r) {
      std::size_t col = pivot_col_of_row[r];
      Poly value = srows[r].rest.scaled(-1);
      for (std::size_t f = 0; f < stage_vars.size(); ++f) {
        if (f == col || sgn(srows[r].coeffs[f]) == 0) continue;
        value = value - assign.at(stage_vars[f]).scaled(srows[r].coeffs[f]);
      }
      assign[stage_vars[col]] = value.substitute_all(assign);
    }
    if (st.status != StageStatus::Obstructed) {
      if (conditional)
        st.status = StageStatus::Conditional;
      else if (st.eliminated_parameters > 0)
        st.status = StageStatus::Restricted;
      else if (st.slice_dim == 0)
        st.status = StageStatus::Trivial;
      else
        st.status = StageStatus::Unobstructed;
    }
    result.stages.push_back(st);
  }
  if (!result.empty) {
    for (std::size_t i = 0; i < ncoords; ++i) {
      std::vector<Poly> comps;
      for (std::size_t alpha = 0; alpha < da; ++alpha) {
        unsigned var = static_cast<unsigned>(i * da + alpha);
        auto it = assign.find(var);
        if (it == assign.end()) {
          // Coordinate of a stage beyond max_stage: left unresolved as zero.
          comps.push_back(Poly());
        } else {
          comps.push_back(it->second.substitute_all(assign));
        }
      }
      result.assignments.push_back(std::move(comps));
    }
    for (Poly& p : result.residuals) p = p.substitute_all(assign);
    result.residuals.erase(
        std::remove_if(result.residuals.begin(), result.residuals.end(),
                       [](const Poly& p) { return p.is_zero(); }),
        result.residuals.end());
    if (result.residuals.empty()) {
      // Exactness check: the parametrization satisfies every processed
      // constraint identically.
      for (const ExpandedRow& r : rows) {
        if (r.stage > max_stage) continue;
        if (!r.poly.substitute_all(assign).is_zero())
          throw ComputeError("tower parametrization fails a constraint");
      }
    }
  }
  for (bool a : result.parameter_active)
    if (a) ++result.num_parameters;
  return result;
}

TowerResult evaluate_points(const GradedExtension& ext,
                            const CoefficientAlgebra& algebra) {
  return run_tower(ext, ext.depth(), algebra);
}

namespace {

/// Embedding of the total space of one truncation into a deeper one, by
/// basis names.
Matrix truncation_embedding(const GradedExtension& shallow,
                            const GradedExtension& deep) {
  Matrix m(deep.total().dim(), shallow.total().dim());
  for (std::size_t j = 0; j < shallow.total().dim(); ++j)
    m.at(deep.total().space().index_of(shallow.total().space().name(j)), j) = 1;
  return m;
}

}  // namespace

Cochain stage_defect(const GradedExtension& ext, int stage,
                     const Matrix& previous_section) {
  if (stage < 1) throw InputError("stage must be >= 1");
  GradedExtension prev_ext = ext.truncated(stage - 1);
  GradedExtension cur_ext = ext.truncated(stage);
  ValidationReport check =
      validate_section(prev_ext, previous_section, /*graded=*/true);
  if (!check.ok())
    throw InputError("previous section fails its stage constraints: " +
                     check.issues[0].check + ": " + check.issues[0].detail);
  if (!is_equivariant_section(prev_ext, previous_section))
    throw InputError("previous section is not equivariant");
  Matrix embed = truncation_embedding(prev_ext, cur_ext);
  Matrix lifted = embed * previous_section;
  const GradedLieAlgebra& total = cur_ext.total();
  const GradedLieAlgebra& g = cur_ext.quotient();
  LieModule module = ext.slice_module(stage);
  CochainComplex complex(module, ext.slice_action(stage));
  CochainSlice s2 = complex.slice(2, 0);
  Cochain defect{2, 0, vec_zero(s2.dim())};
  std::vector<std::size_t> slice_members = cur_ext.kernel_slice(stage);
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      Vec h = total.bracket(lifted.column(a), lifted.column(b));
      h = vec_sub(h, lifted.apply(g.bracket(a, b)));
      Vec hk = cur_ext.project_kernel(h);
      if (!vec_is_zero(cur_ext.project_quotient(h)))
        throw ComputeError("stage defect has a quotient component");
      Vec value = vec_zero(slice_members.size());
      for (std::size_t i = 0; i < hk.size(); ++i) {
        if (sgn(hk[i]) == 0) continue;
        auto member =
            std::find(slice_members.begin(), slice_members.end(), i);
        if (member == slice_members.end())
          throw ComputeError("stage defect leaves the deepest slice");
        value[member - slice_members.begin()] = hk[i];
      }
      if (vec_is_zero(value)) continue;
      std::vector<std::size_t> tup{a, b};
      auto it = s2.tuple_pos.find(tup);
      if (it == s2.tuple_pos.end())
        throw ComputeError("defect tuple outside the weight-0 slice");
      for (auto& [vm, pos] : s2.by_tuple[it->second])
        defect.values[pos] = value[vm];
    }
  return defect;
}

StageObstruction obstruction(const GradedExtension& ext, int stage,
                             const Matrix& previous_section) {
  StageObstruction out;
  out.stage = stage;
  out.defect = stage_defect(ext, stage, previous_section);
  LieModule module = ext.slice_module(stage);
  CochainComplex complex(module, ext.slice_action(stage));
  bool invariant = ext.action().has_value();
  Cochain dd = complex.apply_d(out.defect);
  if (!vec_is_zero(dd.values))
    throw ComputeError("stage defect is not a cocycle");
  CohomologyData h2 = complex.cohomology(2, 0, invariant);
  out.h2_dim = h2.dim;
  out.class_coordinates = complex.class_coordinates(out.defect, h2);
  out.zero = vec_is_zero(out.class_coordinates);
  return out;
}

StageLift lift_section(const GradedExtension& ext, int stage,
                       const Matrix& previous_section) {
  StageLift out;
  out.obstruction = obstruction(ext, stage, previous_section);
  GradedExtension prev_ext = ext.truncated(stage - 1);
  GradedExtension cur_ext = ext.truncated(stage);
  LieModule module = ext.slice_module(stage);
  CochainComplex complex(module, ext.slice_action(stage));
  bool invariant = ext.action().has_value();
  CochainSlice s1 = complex.slice(1, 0);
  std::vector<std::size_t> slice_members = cur_ext.kernel_slice(stage);
  const GradedLieAlgebra& g = cur_ext.quotient();
  auto correction_of = [&](const Vec& cochain_values) {
    Matrix corr(slice_members.size(), g.dim());
    for (std::size_t pos = 0; pos < s1.coords.size(); ++pos) {
      auto [tpos, m] = s1.coords[pos];
      std::size_t a = s1.tuples[tpos].idx[0];
      corr.at(m, a) = cochain_values[pos];
    }
    return corr;
  };
  CohomologyData h1 = complex.cohomology(1, 0, invariant);
  for (const Vec& z : h1.cocycle_basis) out.torsor.push_back(correction_of(z));
  if (!out.obstruction.zero) return out;
  Cochain negated{2, 0, vec_scale(rat(-1), out.obstruction.defect.values)};
  auto prim = complex.primitive(negated, invariant);
  if (!prim)
    throw ComputeError("vanishing obstruction without an invariant primitive");
  Matrix embed = truncation_embedding(prev_ext, cur_ext);
  Matrix lifted = embed * previous_section;
  Matrix corr = correction_of(prim->values);
  // Spread the slice correction into the full kernel coordinates.
  Matrix full_corr(cur_ext.kernel_indices().size(), g.dim());
  for (std::size_t m = 0; m < slice_members.size(); ++m)
    for (std::size_t q = 0; q < g.dim(); ++q)
      full_corr.at(slice_members[m], q) = corr.at(m, q);
  Matrix section = lifted;
  const std::vector<std::size_t>& kidx = cur_ext.kernel_indices();
  for (std::size_t i = 0; i < kidx.size(); ++i)
    for (std::size_t q = 0; q < g.dim(); ++q)
      section.at(kidx[i], q) += full_corr.at(i, q);
  ValidationReport check = validate_section(cur_ext, section, /*graded=*/true);
  if (!check.ok())
    throw ComputeError("lifted section fails validation: " +
                       check.issues[0].detail);
  if (!is_equivariant_section(cur_ext, section))
    throw ComputeError("lifted section is not equivariant");
  out.section = std::move(section);
  return out;
}

}  // namespace nabco
