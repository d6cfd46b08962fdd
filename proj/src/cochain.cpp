// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "cochain.hpp"

#include <algorithm>

#include "error.hpp"
#include "group_action.hpp"

namespace nabco {

CochainComplex::CochainComplex(const LieModule& module,
                               std::optional<ActionPair> action)
    : module_(&module), action_(std::move(action)) {
  if (action_) {
    std::size_t n = module_->algebra().dim();
    std::size_t d = module_->dim();
    if (action_->on_algebra.size() != action_->on_module.size())
      throw InputError("action pair: generator lists differ in length");
    for (const Matrix& m : action_->on_algebra)
      if (m.rows() != n || m.cols() != n)
        throw InputError("action pair: algebra matrix shape mismatch");
    for (const Matrix& m : action_->on_module)
      if (m.rows() != d || m.cols() != d)
        throw InputError("action pair: module matrix shape mismatch");
  }
}

CochainSlice CochainComplex::slice(unsigned degree, int weight) const {
  CochainSlice s;
  s.degree = degree;
  s.weight = weight;
  const GradedVectorSpace& g = module_->algebra().space();
  const GradedVectorSpace& v = module_->space();
  for (const WedgeTuple& t : exterior_basis(g, degree)) {
    std::vector<std::pair<std::size_t, std::size_t>> here;
    for (std::size_t m = 0; m < v.dim(); ++m)
      if (v.weight(m) - t.weight == weight) here.push_back({0, m});
    if (here.empty()) continue;
    std::size_t tpos = s.tuples.size();
    s.tuples.push_back(t);
    s.tuple_pos.emplace(t.idx, tpos);
    std::vector<std::pair<std::size_t, std::size_t>> by;
    for (auto& [unused, m] : here) {
      by.push_back({m, s.coords.size()});
      s.coords.push_back({tpos, m});
    }
    s.by_tuple.push_back(std::move(by));
  }
  return s;
}

Vec CochainComplex::value_at(const CochainSlice& s, const Cochain& c,
                             const std::vector<std::size_t>& sorted_tuple) const {
  Vec out = vec_zero(module_->dim());
  auto it = s.tuple_pos.find(sorted_tuple);
  if (it == s.tuple_pos.end()) return out;
  for (auto& [m, pos] : s.by_tuple[it->second]) out[m] = c.values[pos];
  return out;
}

Cochain CochainComplex::apply_d(const Cochain& c) const {
  CochainSlice src = slice(c.degree, c.weight);
  if (c.values.size() != src.dim())
    throw ComputeError("cochain does not match its slice");
  CochainSlice dst = slice(c.degree + 1, c.weight);
  const GradedLieAlgebra& g = module_->algebra();
  Cochain out{c.degree + 1, c.weight, vec_zero(dst.dim())};
  for (const WedgeTuple& S : exterior_basis(g.space(), c.degree + 1)) {
    Vec value = vec_zero(module_->dim());
    for (std::size_t a = 0; a < S.idx.size(); ++a) {
      std::vector<std::size_t> rest;
      for (std::size_t p = 0; p < S.idx.size(); ++p)
        if (p != a) rest.push_back(S.idx[p]);
      Vec inner = value_at(src, c, rest);
      if (!vec_is_zero(inner)) {
        Vec term = module_->action(S.idx[a]).apply(inner);
        if (a % 2 == 1) term = vec_scale(rat(-1), term);
        value = vec_add(value, term);
      }
    }
    for (std::size_t a = 0; a < S.idx.size(); ++a)
      for (std::size_t b = a + 1; b < S.idx.size(); ++b) {
        const Vec& br = g.bracket(S.idx[a], S.idx[b]);
        if (vec_is_zero(br)) continue;
        std::vector<std::size_t> rest;
        for (std::size_t p = 0; p < S.idx.size(); ++p)
          if (p != a && p != b) rest.push_back(S.idx[p]);
        for (std::size_t k = 0; k < br.size(); ++k) {
          if (sgn(br[k]) == 0) continue;
          std::vector<std::size_t> tup;
          tup.push_back(k);
          tup.insert(tup.end(), rest.begin(), rest.end());
          int sign = sort_tuple(tup);
          if (sign == 0) continue;
          Vec inner = value_at(src, c, tup);
          if (vec_is_zero(inner)) continue;
          Rational coeff = br[k] * rat(sign) * rat((a + b) % 2 == 0 ? 1 : -1);
          vec_axpy(value, coeff, inner);
        }
      }
    if (vec_is_zero(value)) continue;
    auto it = dst.tuple_pos.find(S.idx);
    if (it == dst.tuple_pos.end())
      throw ComputeError("differential leaves the weight slice");
    Vec placed = vec_zero(module_->dim());
    for (auto& [m, pos] : dst.by_tuple[it->second]) {
      out.values[pos] = value[m];
      placed[m] = value[m];
    }
    if (placed != value)
      throw ComputeError("differential leaves the weight slice");
  }
  return out;
}

Matrix CochainComplex::differential(unsigned degree, int weight) const {
  CochainSlice src = slice(degree, weight);
  CochainSlice dst = slice(degree + 1, weight);
  Matrix m(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    Cochain unit{degree, weight, vec_unit(src.dim(), j)};
    m.set_column(j, apply_d(unit).values);
  }
  return m;
}

std::vector<Matrix> CochainComplex::action_on_slice(unsigned degree,
                                                    int weight) const {
  if (!action_) return {};
  CochainSlice s = slice(degree, weight);
  std::vector<Matrix> out;
  for (std::size_t gidx = 0; gidx < action_->on_algebra.size(); ++gidx) {
    Matrix inv = invert(action_->on_algebra[gidx]);
    const Matrix& on_v = action_->on_module[gidx];
    Matrix act(s.dim(), s.dim());
    // (g . c)(S) = g . c(g^{-1} S); expand the wedge of the inverse columns.
    for (std::size_t tpos = 0; tpos < s.tuples.size(); ++tpos) {
      const WedgeTuple& S = s.tuples[tpos];
      std::map<std::vector<std::size_t>, Rational> wedge;
      wedge.emplace(std::vector<std::size_t>{}, Rational(1));
      for (std::size_t i : S.idx) {
        std::map<std::vector<std::size_t>, Rational> next;
        Vec col = inv.column(i);
        for (const auto& [tup, coeff] : wedge)
          for (std::size_t k = 0; k < col.size(); ++k) {
            if (sgn(col[k]) == 0) continue;
            std::vector<std::size_t> ext(tup);
            ext.push_back(k);
            int sign = sort_tuple(ext);
            if (sign == 0) continue;
            next[ext] += coeff * col[k] * rat(sign);
          }
        wedge = std::move(next);
      }
      for (const auto& [tup, coeff] : wedge) {
        if (sgn(coeff) == 0) continue;
        auto it = s.tuple_pos.find(tup);
        if (it == s.tuple_pos.end()) continue;
        // d c at S gets coeff * on_v . c(tup): column (tup, v) contributes to
        // rows (S, u).
        for (auto& [v, src_pos] : s.by_tuple[it->second])
          for (auto& [u, dst_pos] : s.by_tuple[tpos])
            act.at(dst_pos, src_pos) += coeff * on_v.at(u, v);
      }
    }
    out.push_back(std::move(act));
  }
  return out;
}

std::vector<Vec> CochainComplex::invariant_slice_basis(unsigned degree,
                                                       int weight) const {
  CochainSlice s = slice(degree, weight);
  if (!action_) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < s.dim(); ++i)
      all.push_back(vec_unit(s.dim(), i));
    return all;
  }
  return invariant_subspace_of(action_on_slice(degree, weight), s.dim());
}

Matrix CochainComplex::restricted_differential(
    unsigned degree, int weight, const std::vector<Vec>& domain_inv,
    const std::vector<Vec>& target_inv) const {
  Matrix d = differential(degree, weight);
  CochainSlice dst = slice(degree + 1, weight);
  Matrix target = Matrix::from_columns(dst.dim(), target_inv);
  Matrix out(target_inv.size(), domain_inv.size());
  for (std::size_t j = 0; j < domain_inv.size(); ++j) {
    Vec image = d.apply(domain_inv[j]);
    auto sol = solve_affine(target, image);
    if (!sol)
      throw ComputeError(
          "differential of an invariant cochain is not invariant");
    out.set_column(j, sol->particular);
  }
  return out;
}

CohomologyData CochainComplex::cohomology(unsigned degree, int weight,
                                          bool invariant) const {
  if (invariant && !action_)
    throw InputError("invariant cohomology requested without a group action");
  CochainSlice s = slice(degree, weight);
  CohomologyData data;
  data.degree = degree;
  data.weight = weight;
  data.invariant = invariant;
  std::vector<Vec> z_basis;   // in working coordinates
  std::vector<Vec> b_basis;   // in working coordinates
  std::vector<Vec> inv_basis; // embedding of working coords when invariant
  if (!invariant) {
    KernelImage ki = kernel_image(differential(degree, weight));
    z_basis = std::move(ki.kernel);
    if (degree > 0) {
      KernelImage prev = kernel_image(differential(degree - 1, weight));
      // image basis must be the image of the differential in slice coords
      b_basis = std::move(prev.image);
    }
  } else {
    inv_basis = invariant_slice_basis(degree, weight);
    std::vector<Vec> next_inv = invariant_slice_basis(degree + 1, weight);
    Matrix d_res =
        restricted_differential(degree, weight, inv_basis, next_inv);
    KernelImage ki = kernel_image(d_res);
    z_basis = std::move(ki.kernel);
    if (degree > 0) {
      std::vector<Vec> prev_inv = invariant_slice_basis(degree - 1, weight);
      Matrix d_prev =
          restricted_differential(degree - 1, weight, prev_inv, inv_basis);
      b_basis = kernel_image(d_prev).image;
    }
  }
  data.cocycle_dim = z_basis.size();
  {
    RowSpan bspan(invariant ? inv_basis.size() : s.dim());
    for (const Vec& b : b_basis) bspan.add(b);
    data.coboundary_dim = bspan.dim();
    RowSpan reduced = bspan;
    for (const Vec& z : z_basis) {
      Vec r = reduced.reduce(z);
      if (vec_is_zero(r)) continue;
      reduced.add(r);
      Vec full = r;
      if (invariant) {
        full = vec_zero(s.dim());
        for (std::size_t i = 0; i < inv_basis.size(); ++i)
          vec_axpy(full, r[i], inv_basis[i]);
      }
      data.representatives.push_back(Cochain{degree, weight, std::move(full)});
    }
  }
  data.dim = data.representatives.size();
  for (const Vec& z : z_basis) {
    Vec full = z;
    if (invariant) {
      full = vec_zero(s.dim());
      for (std::size_t i = 0; i < inv_basis.size(); ++i)
        vec_axpy(full, z[i], inv_basis[i]);
    }
    data.cocycle_basis.push_back(std::move(full));
  }
  return data;
}

std::optional<Cochain> CochainComplex::primitive(const Cochain& z,
                                                 bool invariant) const {
  if (z.degree == 0) throw InputError("primitive of a degree-0 cochain");
  unsigned degree = z.degree - 1;
  CochainSlice below = slice(degree, z.weight);
  CochainSlice here = slice(z.degree, z.weight);
  if (z.values.size() != here.dim())
    throw ComputeError("cochain does not match its slice");
  if (!invariant) {
    auto sol = solve_affine(differential(degree, z.weight), z.values);
    if (!sol) return std::nullopt;
    return Cochain{degree, z.weight, sol->particular};
  }
  if (!action_)
    throw InputError("invariant primitive requested without a group action");
  std::vector<Vec> here_inv = invariant_slice_basis(z.degree, z.weight);
  Matrix embed = Matrix::from_columns(here.dim(), here_inv);
  auto in_inv = solve_affine(embed, z.values);
  if (!in_inv) throw InputError("cochain is not invariant");
  std::vector<Vec> below_inv = invariant_slice_basis(degree, z.weight);
  Matrix d_res = restricted_differential(degree, z.weight, below_inv, here_inv);
  auto sol = solve_affine(d_res, in_inv->particular);
  if (!sol) return std::nullopt;
  Vec full = vec_zero(below.dim());
  for (std::size_t i = 0; i < below_inv.size(); ++i)
    vec_axpy(full, sol->particular[i], below_inv[i]);
  return Cochain{degree, z.weight, std::move(full)};
}

Vec CochainComplex::class_coordinates(const Cochain& z,
                                      const CohomologyData& data) const {
  CochainSlice s = slice(z.degree, z.weight);
  if (z.values.size() != s.dim())
    throw ComputeError("cochain does not match its slice");
  std::size_t r = data.representatives.size();
  Matrix d_prev = z.degree > 0 ? differential(z.degree - 1, z.weight)
                               : Matrix(s.dim(), 0);
  Matrix sys(s.dim(), r + d_prev.cols());
  for (std::size_t j = 0; j < r; ++j)
    sys.set_column(j, data.representatives[j].values);
  for (std::size_t j = 0; j < d_prev.cols(); ++j)
    sys.set_column(r + j, d_prev.column(j));
  auto sol = solve_affine(sys, z.values);
  if (!sol)
    throw ComputeError(
        "cocycle does not lie in the span of representatives and "
        "coboundaries");
  Vec coords(sol->particular.begin(), sol->particular.begin() + r);
  return coords;
}

HomIdentification hom_identification(const LieModule& module,
                                     const std::optional<ActionPair>& action) {
  const GradedLieAlgebra& g = module.algebra();
  const GradedVectorSpace& v = module.space();
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v.weight(i) == 0)
      throw InputError("hom identification requires coefficients without a "
                       "weight-0 component; found " + v.name(i));
  for (std::size_t i : g.negative_indices())
    if (!module.action(i).is_zero())
      throw InputError(
          "hom identification requires the negative part to act trivially; " +
          g.space().name(i) + " acts nontrivially");
  Abelianization ab = abelianization(g);
  CochainComplex complex(module, action ? std::optional<ActionPair>(*action)
                                        : std::nullopt);
  CohomologyData coh = complex.cohomology(1, 0, action.has_value());
  // Weight-preserving Hom(H_1, V) coordinates: pairs (rep, module basis) of
  // equal weight.
  std::vector<std::pair<std::size_t, std::size_t>> hom_coords;
  for (std::size_t k = 0; k < ab.rep_indices.size(); ++k)
    for (std::size_t m = 0; m < v.dim(); ++m)
      if (v.weight(m) == g.space().weight(ab.rep_indices[k]))
        hom_coords.push_back({k, m});
  HomIdentification out;
  out.h1_rep_indices = ab.rep_indices;
  out.h1_dim = coh.dim;
  std::size_t hom_ambient = hom_coords.size();
  std::vector<Vec> hom_inv_basis;
  if (action && !action->on_algebra.empty()) {
    // Action on H_1 representatives: push a representative through a
    // generator and reduce modulo commutators; the remainder is supported on
    // representative indices.
    RowSpan comm(g.dim());
    for (const Vec& c : ab.commutator_span) comm.add(c);
    std::vector<Matrix> hom_gens;
    for (std::size_t gi = 0; gi < action->on_algebra.size(); ++gi) {
      Matrix on_h1(ab.rep_indices.size(), ab.rep_indices.size());
      for (std::size_t k = 0; k < ab.rep_indices.size(); ++k) {
        Vec image = action->on_algebra[gi].apply(
            vec_unit(g.dim(), ab.rep_indices[k]));
        Vec red = comm.reduce(image);
        for (std::size_t k2 = 0; k2 < ab.rep_indices.size(); ++k2)
          on_h1.at(k2, k) = red[ab.rep_indices[k2]];
      }
      Matrix on_h1_inv = invert(on_h1);
      const Matrix& on_v = action->on_module[gi];
      Matrix hom_gen(hom_ambient, hom_ambient);
      // (g . phi)(x) = g . phi(g^{-1} x)
      for (std::size_t cs = 0; cs < hom_ambient; ++cs) {
        auto [k_src, m_src] = hom_coords[cs];
        for (std::size_t cd = 0; cd < hom_ambient; ++cd) {
          auto [k_dst, m_dst] = hom_coords[cd];
          hom_gen.at(cd, cs) =
              on_v.at(m_dst, m_src) * on_h1_inv.at(k_src, k_dst);
        }
      }
      hom_gens.push_back(std::move(hom_gen));
    }
    hom_inv_basis = invariant_subspace_of(hom_gens, hom_ambient);
    out.hom_dim = hom_inv_basis.size();
  } else {
    out.hom_dim = hom_ambient;
  }
  // Restriction of cohomology representatives to H_1 representatives.
  CochainSlice s1 = complex.slice(1, 0);
  Matrix restr(hom_ambient, coh.representatives.size());
  for (std::size_t j = 0; j < coh.representatives.size(); ++j) {
    const Cochain& rep = coh.representatives[j];
    for (std::size_t cs = 0; cs < hom_ambient; ++cs) {
      auto [k, m] = hom_coords[cs];
      std::vector<std::size_t> tup{ab.rep_indices[k]};
      auto it = s1.tuple_pos.find(tup);
      if (it == s1.tuple_pos.end()) continue;
      for (auto& [vm, pos] : s1.by_tuple[it->second])
        if (vm == m) restr.at(cs, j) = rep.values[pos];
    }
  }
  out.restriction = restr;
  out.injective = kernel_image(restr).kernel.empty();
  // Surjectivity onto the (equivariant) Hom space: the restriction columns
  // span it.
  if (action && !action->on_algebra.empty()) {
    RowSpan span(hom_ambient);
    for (const Vec& b : hom_inv_basis) span.add(b);
    bool contained = true;
    for (std::size_t j = 0; j < restr.cols(); ++j)
      if (!span.contains(restr.column(j))) contained = false;
    RowSpan col_span(hom_ambient);
    for (std::size_t j = 0; j < restr.cols(); ++j) col_span.add(restr.column(j));
    out.surjective = contained && col_span.dim() == out.hom_dim;
  } else {
    RowSpan col_span(hom_ambient);
    for (std::size_t j = 0; j < restr.cols(); ++j) col_span.add(restr.column(j));
    out.surjective = col_span.dim() == out.hom_dim;
  }
  return out;
}

}  // namespace nabco
