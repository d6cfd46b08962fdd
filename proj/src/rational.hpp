// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nabco {

/// Exact rational scalar.  All values passed between functions are canonical
/// (reduced, denominator positive); parse_rational and rat enforce this.
using Rational = mpq_class;

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/// Canonical rational from integers.  The raw two-argument mpq_class
/// constructor does not reduce; always build scalars through this.
Rational rat(long num, long den = 1);

/// Parses "p", "-p", or "p/q" with integer p, q and q nonzero.  Anything else
/// (decimals, whitespace, empty) raises InputError.  Result is canonical.
Rational parse_rational(const std::string& text);

/// Formats canonically as "p" or "p/q" with q > 1.
std::string format_rational(const Rational& value);

bool vec_is_zero(const Vec& v);
Vec vec_zero(std::size_t n);
Vec vec_unit(std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
/// a += c * b.
void vec_axpy(Vec& a, const Rational& c, const Vec& b);

}  // namespace nabco
