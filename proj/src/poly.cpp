// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "poly.hpp"

#include <set>
#include <sstream>

#include "error.hpp"

namespace nabco {

namespace {

unsigned mono_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
      out.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.push_back({a[i].first, a[i].second + b[j].second});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return a < b;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

Poly Poly::variable(unsigned var) {
  Poly p;
  p.terms_.emplace(Monomial{{var, 1}}, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.emplace(m, Rational(0)).first;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly out(*this);
  for (auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out(*this);
  for (auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out;
  if (sgn(c) == 0) return out;
  for (auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

std::optional<Poly::Affine> Poly::as_affine() const {
  Affine aff;
  aff.constant = 0;
  for (auto& [m, c] : terms_) {
    if (m.empty())
      aff.constant = c;
    else if (m.size() == 1 && m[0].second == 1)
      aff.linear[m[0].first] = c;
    else
      return std::nullopt;
  }
  return aff;
}

Poly Poly::substitute(unsigned var, const Poly& replacement) const {
  Poly out;
  for (auto& [m, c] : terms_) {
    unsigned exp = 0;
    Monomial rest;
    for (auto& [v, e] : m) {
      if (v == var)
        exp = e;
      else
        rest.push_back({v, e});
    }
    if (exp == 0) {
      out.add_term(m, c);
      continue;
    }
    Poly factor = Poly::constant(Rational(1));
    for (unsigned k = 0; k < exp; ++k) factor = factor * replacement;
    Poly base;
    base.add_term(rest, c);
    Poly term = base * factor;
    for (auto& [tm, tc] : term.terms_) out.add_term(tm, tc);
  }
  return out;
}

Poly Poly::substitute_all(const std::map<unsigned, Poly>& assignment) const {
  Poly out = *this;
  // Repeated single-variable substitution; assignments must not be circular.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [var, repl] : assignment) {
      if (!out.uses_variable(var)) continue;
      out = out.substitute(var, repl);
      changed = true;
    }
  }
  return out;
}

bool Poly::uses_variable(unsigned var) const {
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m)
      if (v == var) return true;
  return false;
}

std::vector<unsigned> Poly::variables() const {
  std::set<unsigned> vars;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m) vars.insert(v);
  return std::vector<unsigned>(vars.begin(), vars.end());
}

Rational Poly::evaluate(const std::map<unsigned, Rational>& point) const {
  Rational total(0);
  for (auto& [m, c] : terms_) {
    Rational term = c;
    for (auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end())
        throw InputError("evaluation point misses variable " +
                         std::to_string(v));
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty())
    throw ComputeError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / leading_coefficient());
}

std::string Poly::to_string(
    const std::vector<std::string>& variable_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool wrote_coeff = false;
    if (a != Rational(1) || m.empty()) {
      out << format_rational(a);
      wrote_coeff = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (wrote_coeff || i > 0) out << "*";
      auto [v, e] = m[i];
      if (v < variable_names.size())
        out << variable_names[v];
      else
        out << "x" << v;
      if (e > 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

}  // namespace nabco
