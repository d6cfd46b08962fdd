// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "coeff_algebra.hpp"

#include "error.hpp"

namespace nabco {

CoefficientAlgebra::CoefficientAlgebra(std::string name,
                                       std::vector<std::string> basis_names,
                                       std::vector<std::vector<Vec>> table,
                                       Vec unit)
    : name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      table_(std::move(table)),
      unit_(std::move(unit)) {
  std::size_t n = basis_names_.size();
  if (n == 0) throw InputError("algebra '" + name_ + "': empty basis");
  if (table_.size() != n || unit_.size() != n)
    throw InputError("algebra '" + name_ + "': table or unit shape mismatch");
  for (const auto& row : table_) {
    if (row.size() != n)
      throw InputError("algebra '" + name_ + "': table shape mismatch");
    for (const Vec& v : row)
      if (v.size() != n)
        throw InputError("algebra '" + name_ + "': table entry shape mismatch");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table_[i][j] != table_[j][i])
        throw InputError("algebra '" + name_ + "': not commutative at (" +
                         basis_names_[i] + ", " + basis_names_[j] + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec left = mul(table_[i][j], vec_unit(n, k));
        Vec right = mul(vec_unit(n, i), table_[j][k]);
        if (left != right)
          throw InputError("algebra '" + name_ + "': not associative at (" +
                           basis_names_[i] + ", " + basis_names_[j] + ", " +
                           basis_names_[k] + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    if (mul(unit_, vec_unit(n, i)) != vec_unit(n, i))
      throw InputError("algebra '" + name_ + "': unit law fails at " +
                       basis_names_[i]);
}

Vec CoefficientAlgebra::mul(const Vec& a, const Vec& b) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n)
    throw InputError("algebra '" + name_ + "': element dimension mismatch");
  Vec r = vec_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      Rational c = a[i] * b[j];
      vec_axpy(r, c, table_[i][j]);
    }
  }
  return r;
}

CoefficientAlgebra CoefficientAlgebra::rationals() {
  return CoefficientAlgebra("rationals", {"1"}, {{Vec{Rational(1)}}},
                            Vec{Rational(1)});
}

CoefficientAlgebra CoefficientAlgebra::dual_numbers() {
  Vec one{Rational(1), Rational(0)};
  Vec eps{Rational(0), Rational(1)};
  Vec zero = vec_zero(2);
  return CoefficientAlgebra("dual", {"1", "eps"}, {{one, eps}, {eps, zero}},
                            one);
}

CoefficientAlgebra CoefficientAlgebra::split() {
  Vec e1{Rational(1), Rational(0)};
  Vec e2{Rational(0), Rational(1)};
  Vec zero = vec_zero(2);
  return CoefficientAlgebra("split", {"e1", "e2"}, {{e1, zero}, {zero, e2}},
                            vec_add(e1, e2));
}

CoefficientAlgebra CoefficientAlgebra::truncated_cubic() {
  Vec one{Rational(1), Rational(0), Rational(0)};
  Vec t{Rational(0), Rational(1), Rational(0)};
  Vec t2{Rational(0), Rational(0), Rational(1)};
  Vec zero = vec_zero(3);
  return CoefficientAlgebra("t3", {"1", "t", "t2"},
                            {{one, t, t2}, {t, t2, zero}, {t2, zero, zero}},
                            one);
}

CoefficientAlgebra CoefficientAlgebra::by_name(const std::string& name) {
  if (name == "rationals") return rationals();
  if (name == "dual") return dual_numbers();
  if (name == "split") return split();
  if (name == "t3") return truncated_cubic();
  throw InputError("unknown coefficient algebra '" + name +
                   "', expected rationals, dual, split, or t3");
}

AlgebraElement make_element(const CoefficientAlgebra& a, Vec coords) {
  if (coords.size() != a.dim())
    throw InputError("algebra '" + a.name() + "': element dimension mismatch");
  return AlgebraElement{a.name(), std::move(coords)};
}

namespace {

void check_parent(const CoefficientAlgebra& a, const AlgebraElement& x) {
  if (x.algebra != a.name())
    throw InputError("element of algebra '" + x.algebra +
                     "' used in algebra '" + a.name() + "'");
}

}  // namespace

AlgebraElement element_mul(const CoefficientAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y) {
  check_parent(a, x);
  check_parent(a, y);
  return AlgebraElement{a.name(), a.mul(x.coords, y.coords)};
}

AlgebraElement element_add(const CoefficientAlgebra& a, const AlgebraElement& x,
                           const AlgebraElement& y) {
  check_parent(a, x);
  check_parent(a, y);
  return AlgebraElement{a.name(), vec_add(x.coords, y.coords)};
}

Vec scalar_embed(const CoefficientAlgebra& a, const Rational& c) {
  return vec_scale(c, a.unit());
}

std::string format_algebra_element(const CoefficientAlgebra& a, const Vec& v) {
  if (v.size() != a.dim())
    throw InputError("element has wrong length for algebra " + a.name());
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::string term;
    bool negative = v[i] < 0;
    Rational mag = negative ? Rational(-v[i]) : v[i];
    if (a.basis_name(i) == "1") {
      term = format_rational(mag);
    } else if (mag == 1) {
      term = a.basis_name(i);
    } else {
      term = format_rational(mag) + "*" + a.basis_name(i);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace nabco
