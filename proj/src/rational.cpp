// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "rational.hpp"

#include <cctype>
#include <cstddef>

#include "error.hpp"

namespace nabco {

Rational rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool scan_integer(const std::string& s, std::size_t& pos) {
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++digits;
  }
  return digits > 0;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  bool ok = scan_integer(text, pos);
  if (ok && pos < text.size() && text[pos] == '/') {
    ++pos;
    ok = scan_integer(text, pos);
  }
  if (!ok || pos != text.size())
    throw InputError("invalid rational '" + text + "', expected p or p/q");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw InputError("invalid rational '" + text + "'");
  if (sgn(q.get_den()) == 0)
    throw InputError("invalid rational '" + text + "', zero denominator");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

bool vec_is_zero(const Vec& v) {
  for (const Rational& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec vec_zero(std::size_t n) { return Vec(n, Rational(0)); }

Vec vec_unit(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r(v);
  for (Rational& x : r) x *= c;
  return r;
}

void vec_axpy(Vec& a, const Rational& c, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

}  // namespace nabco
