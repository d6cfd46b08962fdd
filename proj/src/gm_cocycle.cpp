// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "gm_cocycle.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace nabco {

LaurentPoly::LaurentPoly(CoefficientAlgebra algebra, long bound)
    : algebra_(std::move(algebra)), bound_(bound) {
  if (bound_ < 0) throw InputError("exponent bound must be nonnegative");
}

void LaurentPoly::add_coefficient(long exponent, const Vec& value) {
  if (exponent < -bound_ || exponent > bound_)
    throw InputError("exponent outside the declared window");
  if (value.size() != algebra_.dim())
    throw InputError("coefficient has wrong length for algebra " +
                     algebra_.name());
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) {
    if (!vec_is_zero(value)) coeffs_.emplace(exponent, value);
    return;
  }
  it->second = vec_add(it->second, value);
  if (vec_is_zero(it->second)) coeffs_.erase(it);
}

void LaurentPoly::set_coefficient(long exponent, const Vec& value) {
  if (exponent < -bound_ || exponent > bound_)
    throw InputError("exponent outside the declared window");
  if (value.size() != algebra_.dim())
    throw InputError("coefficient has wrong length for algebra " +
                     algebra_.name());
  coeffs_.erase(exponent);
  if (!vec_is_zero(value)) coeffs_.emplace(exponent, value);
}

Vec LaurentPoly::coefficient(long exponent) const {
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) return vec_zero(algebra_.dim());
  return it->second;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return algebra_.name() == other.algebra_.name() && coeffs_ == other.coeffs_;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  // Highest exponent first.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::string coef = "(" + format_algebra_element(algebra_, it->second) + ")";
    std::string mono;
    if (it->first == 0)
      mono = coef;
    else if (it->first == 1)
      mono = coef + "*t";
    else
      mono = coef + "*t^" + std::to_string(it->first);
    if (!out.empty()) out += " + ";
    out += mono;
  }
  return out;
}

LaurentPoly coboundary_poly(const CoefficientAlgebra& algebra, const Vec& a,
                            long d, long bound) {
  if (std::abs(d) > bound)
    throw InputError("exponent bound too small for the twist");
  LaurentPoly f(algebra, bound);
  if (d == 0) return f;  // t^0 - 1 = 0
  f.add_coefficient(d, a);
  f.add_coefficient(0, vec_scale(rat(-1), a));
  return f;
}

CocycleWitness is_cocycle(const LaurentPoly& f, long d) {
  const std::size_t da = f.algebra().dim();
  long box = f.bound();
  if (std::abs(d) > box) box = std::abs(d);
  // Coefficient of t^m s^n on each side of f(ts) = f(t) + t^d f(s):
  // left a_n when m = n, right a_m when n = 0 plus a_n when m = d.
  auto left = [&](long m, long n) {
    return m == n ? f.coefficient(n) : vec_zero(da);
  };
  auto right = [&](long m, long n) {
    Vec v = vec_zero(da);
    if (n == 0) v = vec_add(v, f.coefficient(m));
    if (m == d) v = vec_add(v, f.coefficient(n));
    return v;
  };
  auto compare = [&](long m, long n, CocycleWitness& w) {
    Vec lhs = left(m, n);
    Vec rhs = right(m, n);
    if (lhs == rhs) return true;
    w.ok = false;
    w.m = m;
    w.n = n;
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    return false;
  };
  CocycleWitness witness;
  for (long m = -box; m <= box; ++m)
    if (!compare(m, m, witness)) return witness;
  for (long m = -box; m <= box; ++m)
    for (long n = -box; n <= box; ++n) {
      if (m == n) continue;
      if (!compare(m, n, witness)) return witness;
    }
  return witness;
}

CoboundaryReduction reduce_to_coboundary(const LaurentPoly& f, long d) {
  CocycleWitness w = is_cocycle(f, d);
  if (!w.ok)
    throw InputError("not a cocycle: mismatch at (" + std::to_string(w.m) +
                     ", " + std::to_string(w.n) + ")");
  CoboundaryReduction out;
  if (d == 0) {
    // The identity leaves no room: the only cocycle for twist 0 is zero.
    if (!f.is_zero())
      throw ComputeError("twist-0 cocycle is nonzero after identity check");
    out.forced_zero = true;
    out.a = vec_zero(f.algebra().dim());
    return out;
  }
  out.a = f.coefficient(d);
  LaurentPoly expanded =
      coboundary_poly(f.algebra(), out.a, d, std::max(f.bound(), std::abs(d)));
  LaurentPoly widened(f.algebra(), expanded.bound());
  for (const auto& [exp, val] : f.support()) widened.add_coefficient(exp, val);
  if (!(widened == expanded))
    throw ComputeError("cocycle does not match its coboundary expansion");
  return out;
}

H1Check h1_vanishing_check(long d, long degree_bound,
                           const CoefficientAlgebra& algebra) {
  if (degree_bound < std::abs(d))
    throw InputError("degree bound must be at least |d|");
  const long D = degree_bound;
  const long da = static_cast<long>(algebra.dim());
  const long ncols = (2 * D + 1) * da;
  auto col = [&](long exponent, long comp) {
    return (exponent + D) * da + comp;
  };
  // One scalar equation per monomial t^m s^n and algebra component; the
  // identity has unit coefficients, so components never mix.
  std::vector<Vec> rows;
  const long box = std::max(D, std::abs(d));
  for (long m = -box; m <= box; ++m)
    for (long n = -box; n <= box; ++n) {
      bool left_hit = (m == n) && std::abs(n) <= D;
      bool right_const = (n == 0) && std::abs(m) <= D;
      bool right_twist = (m == d) && std::abs(n) <= D;
      if (!left_hit && !right_const && !right_twist) continue;
      for (long comp = 0; comp < da; ++comp) {
        Vec row = vec_zero(static_cast<std::size_t>(ncols));
        if (left_hit) row[col(n, comp)] += 1;
        if (right_const) row[col(m, comp)] -= 1;
        if (right_twist) row[col(n, comp)] -= 1;
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    }
  Matrix system(rows.size(), static_cast<std::size_t>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < ncols; ++j)
      system.at(i, static_cast<std::size_t>(j)) =
          rows[i][static_cast<std::size_t>(j)];
  KernelImage ki = kernel_image(system);

  H1Check out;
  out.cocycle_dim = static_cast<long>(ki.kernel.size());
  out.coboundary_dim = (d == 0) ? 0 : da;

  bool generators_ok = true;
  RowSpan cob_span(static_cast<std::size_t>(ncols));
  if (d != 0) {
    for (long comp = 0; comp < da; ++comp) {
      Vec gen = vec_zero(static_cast<std::size_t>(ncols));
      gen[col(d, comp)] += 1;
      gen[col(0, comp)] -= 1;
      if (!vec_is_zero(system.apply(gen))) generators_ok = false;
      cob_span.add(gen);
    }
    if (static_cast<long>(cob_span.dim()) != out.coboundary_dim)
      generators_ok = false;
  }
  out.verified = generators_ok && out.cocycle_dim == out.coboundary_dim;
  return out;
}

}  // namespace nabco
