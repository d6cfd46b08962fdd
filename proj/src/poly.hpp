// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace nabco {

/// Monomial: sorted (variable, exponent) pairs, exponents >= 1.
using Monomial = std::vector<std::pair<unsigned, unsigned>>;

/// Term order used for storage, printing, and leading coefficients: total
/// degree descending, then lexicographic on the variable/exponent sequence.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse exact polynomial in numbered variables.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(unsigned var);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  unsigned degree() const;  // 0 for the zero polynomial

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  void add_term(const Monomial& m, const Rational& c);

  /// Affine view: nullopt if degree > 1.
  struct Affine {
    Rational constant;
    std::map<unsigned, Rational> linear;  // by variable
  };
  std::optional<Affine> as_affine() const;

  /// Substitutes a polynomial for one variable.
  Poly substitute(unsigned var, const Poly& replacement) const;
  /// Applies every assignment present in the map.
  Poly substitute_all(const std::map<unsigned, Poly>& assignment) const;

  bool uses_variable(unsigned var) const;
  std::vector<unsigned> variables() const;  // ascending

  Rational evaluate(const std::map<unsigned, Rational>& point) const;

  const Rational& leading_coefficient() const;  // ComputeError on zero
  /// Scaled so the leading coefficient is 1.
  Poly monic() const;

  /// Deterministic rendering with the given variable namer; "0" for zero.
  std::string to_string(
      const std::vector<std::string>& variable_names) const;

  const std::map<Monomial, Rational, MonomialOrder>& terms() const {
    return terms_;
  }

 private:
  std::map<Monomial, Rational, MonomialOrder> terms_;
};

}  // namespace nabco
