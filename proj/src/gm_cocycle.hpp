// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0
//
// Laurent-polynomial 1-cocycles for the multiplicative group acting on a
// rank-one module twisted by an integer weight d, with coefficients in a
// finite-dimensional commutative algebra A.  A function f(t) = sum a_n t^n
// is a cocycle when f(ts) = f(t) + t^d f(s); expanding both sides in the
// monomial basis t^m s^n turns that identity into exact coefficient
// comparisons, which is what this module checks.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "coeff_algebra.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace nabco {

// Finitely supported map from integer exponents to coefficients in A.
// Only nonzero coefficients are stored; `bound` records the declared
// exponent window [-bound, bound] and every stored exponent lies in it.
class LaurentPoly {
 public:
  LaurentPoly(CoefficientAlgebra algebra, long bound);

  const CoefficientAlgebra& algebra() const { return algebra_; }
  long bound() const { return bound_; }

  // Adds `value` to the coefficient of t^n.  The exponent must lie in the
  // declared window and the value must have one component per basis
  // element of A.
  void add_coefficient(long exponent, const Vec& value);
  void set_coefficient(long exponent, const Vec& value);

  // Zero vector when no coefficient is stored at `exponent`.
  Vec coefficient(long exponent) const;

  const std::map<long, Vec>& support() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  bool operator==(const LaurentPoly& other) const;

  // Human-readable form used by reports, e.g. "(1)*t^3 + (-1)".
  std::string to_string() const;

 private:
  CoefficientAlgebra algebra_;
  long bound_ = 0;
  std::map<long, Vec> coeffs_;
};

// a * (t^d - 1) as a LaurentPoly over the algebra of `a`.  For d = 0 this
// is identically zero.  `bound` must admit the exponent d.
LaurentPoly coboundary_poly(const CoefficientAlgebra& algebra, const Vec& a,
                            long d, long bound);

// Outcome of testing the cocycle identity.  When `ok` is false, (m, n)
// locates the first monomial t^m s^n whose two expansions disagree, and
// lhs/rhs hold the differing coefficients.  Pairs are scanned with the
// diagonal m = n first (ascending), then the remaining pairs row by row,
// so a diagonal failure is always reported before an off-diagonal one.
struct CocycleWitness {
  bool ok = true;
  long m = 0;
  long n = 0;
  Vec lhs;
  Vec rhs;
};

CocycleWitness is_cocycle(const LaurentPoly& f, long d);

// Writes a cocycle as a coboundary.  For d != 0 the identity forces
// f = a_d (t^d - 1); the returned element is a = a_d, re-verified by
// expansion.  For d = 0 the identity forces f = 0, reported through
// `forced_zero` with no element.  A non-cocycle input is rejected.
struct CoboundaryReduction {
  bool forced_zero = false;
  Vec a;
};

CoboundaryReduction reduce_to_coboundary(const LaurentPoly& f, long d);

// Assembles the cocycle identity for unknown coefficients a_{-D}..a_D as
// an exact linear system over the rationals (one scalar unknown per
// algebra component, so dim A copies of the scalar system) and verifies
// that its solution space is exactly the coboundaries {a (t^d - 1)}.
// Requires D >= |d| so the coboundary line fits the window.
struct H1Check {
  bool verified = false;
  long cocycle_dim = 0;
  long coboundary_dim = 0;
};

H1Check h1_vanishing_check(long d, long degree_bound,
                           const CoefficientAlgebra& algebra);

}  // namespace nabco
