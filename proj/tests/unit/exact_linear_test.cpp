// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "error.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"

using namespace nabco;

TEST_CASE("rationals are canonical") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(format_rational(rat(-3, 6)) == "-1/2");
  CHECK(format_rational(rat(4, 2)) == "2");
  CHECK(format_rational(rat(0, 7)) == "0");
}

TEST_CASE("rational parsing accepts integers and fractions only") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-4/2") == rat(-2));
  CHECK(parse_rational("0") == rat(0));
  CHECK(parse_rational("-7") == rat(-7));
  CHECK(format_rational(parse_rational("10/-4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("0.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational(" 1"), InputError);
  CHECK_THROWS_AS(parse_rational("1 /2"), InputError);
  CHECK_THROWS_AS(parse_rational("two"), InputError);
}

TEST_CASE("vector helpers") {
  Vec a{rat(1), rat(2)};
  Vec b{rat(3), rat(-1)};
  CHECK(vec_add(a, b) == Vec{rat(4), rat(1)});
  CHECK(vec_sub(a, b) == Vec{rat(-2), rat(3)});
  CHECK(vec_scale(rat(1, 2), a) == Vec{rat(1, 2), rat(1)});
  Vec c = a;
  vec_axpy(c, rat(2), b);
  CHECK(c == Vec{rat(7), rat(0)});
  CHECK(vec_is_zero(vec_zero(3)));
  CHECK_FALSE(vec_is_zero(vec_unit(3, 1)));
}

TEST_CASE("rref computes the canonical form") {
  Matrix m(2, 2);
  m.at(0, 0) = rat(2);
  m.at(0, 1) = rat(4);
  m.at(1, 0) = rat(1);
  m.at(1, 1) = rat(2);
  EchelonForm e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0});
  CHECK(e.mat.at(0, 0) == rat(1));
  CHECK(e.mat.at(0, 1) == rat(2));
  CHECK(e.mat.at(1, 0) == rat(0));
  CHECK(e.mat.at(1, 1) == rat(0));
}

TEST_CASE("rref does not depend on the row order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 3, cols = 4;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = rat(static_cast<long>(rng() % 7) - 3);
    Matrix swapped = m;
    for (std::size_t j = 0; j < cols; ++j) {
      Rational t = swapped.at(0, j);
      swapped.at(0, j) = swapped.at(2, j);
      swapped.at(2, j) = t;
    }
    CHECK(rref(m).mat == rref(swapped).mat);
  }
}

TEST_CASE("solve_affine returns the particular solution with free coordinates zero") {
  Matrix m(1, 2);
  m.at(0, 0) = rat(1);
  m.at(0, 1) = rat(1);
  auto sol = solve_affine(m, Vec{rat(3)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == Vec{rat(3), rat(0)});
  REQUIRE(sol->kernel.size() == 1);
  CHECK(sol->kernel[0] == Vec{rat(-1), rat(1)});
}

TEST_CASE("solve_affine detects inconsistency") {
  Matrix m(2, 1);
  m.at(0, 0) = rat(1);
  m.at(1, 0) = rat(1);
  CHECK_FALSE(solve_affine(m, Vec{rat(1), rat(2)}).has_value());
}

TEST_CASE("kernel_image splits rank and nullity") {
  Matrix m(2, 2);
  m.at(0, 0) = rat(1);
  m.at(0, 1) = rat(2);
  m.at(1, 0) = rat(2);
  m.at(1, 1) = rat(4);
  KernelImage ki = kernel_image(m);
  CHECK(ki.rank == 1);
  REQUIRE(ki.kernel.size() == 1);
  CHECK(ki.kernel[0] == Vec{rat(-2), rat(1)});
  REQUIRE(ki.image.size() == 1);
  CHECK(ki.image[0] == Vec{rat(1), rat(2)});
}

TEST_CASE("quotient_basis completes a subspace by standard vectors") {
  std::vector<Vec> sub{{rat(1), rat(1), rat(0)}};
  std::vector<Vec> q = quotient_basis(3, sub);
  REQUIRE(q.size() == 2);
  CHECK(q[0] == vec_unit(3, 1));
  CHECK(q[1] == vec_unit(3, 2));
}

TEST_CASE("invert is exact and rejects singular input") {
  Matrix m(2, 2);
  m.at(0, 0) = rat(2);
  m.at(0, 1) = rat(1);
  m.at(1, 0) = rat(1);
  m.at(1, 1) = rat(1);
  Matrix inv = invert(m);
  CHECK(inv.at(0, 0) == rat(1));
  CHECK(inv.at(0, 1) == rat(-1));
  CHECK(inv.at(1, 0) == rat(-1));
  CHECK(inv.at(1, 1) == rat(2));
  CHECK((m * inv).is_identity());
  Matrix sing(2, 2);
  sing.at(0, 0) = rat(1);
  sing.at(0, 1) = rat(2);
  sing.at(1, 0) = rat(2);
  sing.at(1, 1) = rat(4);
  CHECK_THROWS_AS(invert(sing), ComputeError);
}

TEST_CASE("row spans reduce canonically regardless of insertion order") {
  Vec v1{rat(1), rat(2), rat(3)};
  Vec v2{rat(4), rat(5), rat(6)};
  Vec v3{rat(7), rat(8), rat(9)};  // dependent on the first two
  RowSpan fwd(3);
  CHECK(fwd.add(v1));
  CHECK(fwd.add(v2));
  CHECK_FALSE(fwd.add(v3));
  RowSpan bwd(3);
  CHECK(bwd.add(v3));
  CHECK(bwd.add(v2));
  CHECK_FALSE(bwd.add(v1));
  CHECK(fwd.dim() == 2);
  CHECK(fwd.rows() == bwd.rows());
  CHECK(fwd.contains(Vec{rat(1), rat(1), rat(1)}));
  Vec outside{rat(1), rat(0), rat(0)};
  CHECK_FALSE(fwd.contains(outside));
  CHECK(fwd.reduce(outside) == bwd.reduce(outside));
}

TEST_CASE("polynomials expand, substitute, and print deterministically") {
  Poly x = Poly::variable(0);
  Poly one = Poly::constant(rat(1));
  Poly sq = (x + one) * (x - one);
  CHECK(sq == x * x - one);
  CHECK(sq.degree() == 2);
  CHECK_FALSE(sq.as_affine().has_value());
  Poly lin = x.scaled(rat(2)) + Poly::constant(rat(4));
  auto aff = lin.as_affine();
  REQUIRE(aff.has_value());
  CHECK(aff->constant == rat(4));
  CHECK(aff->linear.at(0) == rat(2));
  CHECK(lin.monic().to_string({"a"}) == "a + 2");
  Poly expanded = (x + one) * (x + one);
  CHECK(expanded.to_string({"a"}) == "a^2 + 2*a + 1");
  Poly sub = expanded.substitute(0, Poly::variable(1) - one);
  CHECK(sub.to_string({"a", "b"}) == "b^2");
  std::map<unsigned, Rational> point{{0, rat(3)}};
  CHECK(expanded.evaluate(point) == rat(16));
  CHECK(Poly().to_string({}) == "0");
  CHECK(Poly().is_zero());
}

TEST_CASE("substitute_all chains assignments to a fixed point") {
  Poly p = Poly::variable(0) + Poly::variable(1);
  std::map<unsigned, Poly> assign{{0, Poly::variable(1)},
                                  {1, Poly::constant(rat(2))}};
  CHECK(p.substitute_all(assign).to_string({"a", "b"}) == "4");
}
