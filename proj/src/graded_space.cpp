// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "graded_space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "error.hpp"

namespace nabco {

GradedVectorSpace::GradedVectorSpace(std::vector<BasisElement> basis)
    : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name.empty())
      throw InputError("basis element " + std::to_string(i) + " has empty name");
    auto [it, inserted] = index_.emplace(basis_[i].name, i);
    if (!inserted)
      throw InputError("duplicate basis name '" + basis_[i].name + "'");
  }
}

std::optional<std::size_t> GradedVectorSpace::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedVectorSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown basis name '" + name + "'");
  return it->second;
}

std::vector<std::size_t> GradedVectorSpace::component(int m) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].weight == m) idx.push_back(i);
  return idx;
}

std::vector<int> GradedVectorSpace::weights() const {
  std::set<int, std::greater<int>> ws;
  for (const BasisElement& b : basis_) ws.insert(b.weight);
  return std::vector<int>(ws.begin(), ws.end());
}

int GradedVectorSpace::min_weight() const {
  if (basis_.empty()) throw InputError("min_weight of the zero space");
  int m = basis_[0].weight;
  for (const BasisElement& b : basis_) m = std::min(m, b.weight);
  return m;
}

std::optional<int> GradedVectorSpace::homogeneous_weight(const Vec& v) const {
  std::optional<int> w;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (w && *w != basis_[i].weight) return std::nullopt;
    w = basis_[i].weight;
  }
  return w;
}

std::string GradedVectorSpace::describe(const Vec& v) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational c = v[i];
    if (first) {
      if (c == Rational(-1))
        out << "-";
      else if (c != Rational(1))
        out << format_rational(c) << " ";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
      Rational a = abs(c);
      if (a != Rational(1)) out << format_rational(a) << " ";
    }
    out << basis_[i].name;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

GradedMap make_graded_map(const GradedVectorSpace& source,
                          const GradedVectorSpace& target, int shift,
                          Matrix mat) {
  if (mat.rows() != target.dim() || mat.cols() != source.dim())
    throw InputError("graded map shape mismatch");
  for (std::size_t j = 0; j < source.dim(); ++j)
    for (std::size_t i = 0; i < target.dim(); ++i)
      if (sgn(mat.at(i, j)) != 0 &&
          target.weight(i) != source.weight(j) + shift)
        throw InputError("graded map entry (" + target.name(i) + ", " +
                         source.name(j) + ") violates the weight shift");
  return GradedMap{shift, std::move(mat)};
}

GradedMap compose(const GradedVectorSpace& source,
                  const GradedVectorSpace& middle,
                  const GradedVectorSpace& target, const GradedMap& f,
                  const GradedMap& g) {
  if (f.mat.rows() != middle.dim() || f.mat.cols() != source.dim() ||
      g.mat.rows() != target.dim() || g.mat.cols() != middle.dim())
    throw InputError("graded map composition shape mismatch");
  return GradedMap{f.shift + g.shift, g.mat * f.mat};
}

WeightTruncation truncate(const GradedVectorSpace& space, int cutoff) {
  if (cutoff < 1) throw InputError("truncation cutoff must be at least 1");
  WeightTruncation t;
  t.cutoff = cutoff;
  std::vector<BasisElement> kept_basis;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (space.weight(i) >= -cutoff) {
      t.kept.push_back(i);
      kept_basis.push_back(space.basis()[i]);
    }
  }
  t.quotient = GradedVectorSpace(std::move(kept_basis));
  Matrix proj(t.quotient.dim(), space.dim());
  for (std::size_t q = 0; q < t.kept.size(); ++q) proj.at(q, t.kept[q]) = 1;
  t.projection = GradedMap{0, std::move(proj)};
  return t;
}

std::vector<WedgeTuple> exterior_basis(const GradedVectorSpace& space,
                                       unsigned degree) {
  std::vector<WedgeTuple> out;
  std::size_t n = space.dim();
  if (degree > n) return out;
  if (degree == 0) {
    out.push_back(WedgeTuple{{}, 0});
    return out;
  }
  std::vector<std::size_t> idx(degree);
  for (unsigned i = 0; i < degree; ++i) idx[i] = i;
  while (true) {
    int w = 0;
    for (std::size_t i : idx) w += space.weight(i);
    out.push_back(WedgeTuple{idx, w});
    // next strictly increasing tuple in lexicographic order
    std::size_t k = degree;
    while (k > 0) {
      --k;
      if (idx[k] + (degree - k) <= n - 1) {
        ++idx[k];
        for (std::size_t j = k + 1; j < degree; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (k == 0) return out;
    }
  }
}

int sort_tuple(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

}  // namespace nabco
