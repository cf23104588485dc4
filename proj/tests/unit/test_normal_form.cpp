// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "foliage/errors.hpp"
#include "foliage/normal_form.hpp"
#include "oracles.hpp"

using namespace foliage;
using fixtures::q;

namespace {

LinearPart exact2(long long a, long long b, long long c, long long d) {
  return LinearPart::from_exact(2, {GaussianRational(a), GaussianRational(b), GaussianRational(c), GaussianRational(d)});
}

Complex entry(const LinearPart& m, int i, int j) { return m.at(i, j).value(); }

// Max-norm distance of P^{-1} A P from J.
double similarity_error(const LinearPart& a, const JordanForm& jf) {
  int n = a.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += entry(jf.P_inverse, i, k) * entry(a, k, l) * entry(jf.P, l, j);
      worst = std::max(worst, std::abs(s - entry(jf.J, i, j)));
    }
  return worst;
}

}  // namespace

TEST_SUITE("normal-form") {
  TEST_CASE("jordanize leaves Jordan matrices alone") {
    JordanForm d = jordanize(exact2(2, 0, 0, 1));
    CHECK(d.unchanged);
    CHECK(entry(d.J, 0, 0) == Complex(2.0));
    CHECK(entry(d.J, 1, 1) == Complex(1.0));

    JordanForm j = jordanize(exact2(1, 1, 0, 1));
    CHECK(j.unchanged);
    CHECK(entry(j.J, 0, 1) == Complex(1.0));
  }

  TEST_CASE("jordanize diagonalizes a rotation") {
    LinearPart a = exact2(0, -1, 1, 0);
    JordanForm jf = jordanize(a);
    CHECK(jf.exact);
    CHECK(std::abs(entry(jf.J, 0, 1)) == 0.0);
    auto oracle_eigs = oracle::eigenvalues_2x2(0.0, -1.0, 1.0, 0.0);
    Complex d0 = entry(jf.J, 0, 0), d1 = entry(jf.J, 1, 1);
    bool match = (std::abs(d0 - oracle_eigs[0]) < 1e-14 && std::abs(d1 - oracle_eigs[1]) < 1e-14) ||
                 (std::abs(d0 - oracle_eigs[1]) < 1e-14 && std::abs(d1 - oracle_eigs[0]) < 1e-14);
    CHECK(match);
    CHECK(d0 == Complex(0.0, 1.0));
    CHECK(similarity_error(a, jf) < 1e-14);
  }

  TEST_CASE("normal forms are fixed points") {
    for (int m = 1; m <= 3; ++m) {
      GermPoly g = fixtures::resonant_germ(m);
      NormalFormResult nf = poincare_dulac(g);
      CHECK(nf.exact);
      CHECK(nf.normal == g);
      if (m > 1) {
        REQUIRE(nf.resonant_support.size() == 1);
        CHECK(nf.resonant_support[0].component == 0);
        CHECK(nf.resonant_support[0].exponents == MultiIndex{0, m});
      }
    }
    GermPoly lin = fixtures::ratio_germ(q(2, 3));
    NormalFormResult nf = poincare_dulac(lin);
    CHECK(nf.normal == lin);
    CHECK(nf.change.forward == diagonal_linear_germ({q(1), q(1)}));
  }

  TEST_CASE("non-resonant terms are removed") {
    // (2x + x^2 + y^2) d/dx + (y + xy) d/dy: only y^2 in the first component survives.
    GermPoly g(2, {{0, {1, 0}, q(2)}, {0, {2, 0}, q(1)}, {0, {0, 2}, q(1)}, {1, {0, 1}, q(1)}, {1, {1, 1}, q(1)}});
    NormalFormResult nf = poincare_dulac(g, {.degree = 5});
    for (const auto& t : nf.normal.terms()) {
      if (t.degree() == 1) continue;
      CHECK(t.component == 0);
      CHECK(t.exponents == MultiIndex{0, 2});
    }
    CHECK(nf.normal.find(0, {0, 2}) != nullptr);
  }

  TEST_CASE("degree and Poincare preconditions") {
    CHECK_THROWS_AS(poincare_dulac(fixtures::ratio_germ(q(-1)), {}), NotPoincareError);
    CHECK_THROWS_AS(poincare_dulac(fixtures::ratio_germ(q(2)), {.degree = 1}), PreconditionError);
    CHECK(default_degree(spectrum(fixtures::ratio_germ(q(3)))) == 3);
  }

  TEST_CASE("superdiagonal scaling") {
    GermPoly d = fixtures::ratio_germ(q(3));
    CHECK(normalize_superdiagonal(d) == d);

    GermPoly j(2, {{0, {1, 0}, q(1)}, {0, {0, 1}, q(1)}, {1, {0, 1}, q(1)}});
    GermPoly s = normalize_superdiagonal(j);
    REQUIRE(s.find(0, {0, 1}) != nullptr);
    CHECK(s.find(0, {0, 1})->coeff == q(1, 4));

    GermPoly three(3, {{0, {1, 0, 0}, q(2)}, {0, {0, 1, 0}, q(1)}, {1, {0, 1, 0}, q(2)}, {2, {0, 0, 1}, q(1)}});
    SuperdiagonalScaling sc = normalize_superdiagonal_with_factors(three);
    CHECK(sc.target == q(1, 6));
    CHECK(sc.germ.find(0, {0, 1, 0})->coeff == q(1, 6));
  }

  TEST_CASE("two-dimensional canonical types") {
    Canonical2D g = canonical_form_2d(fixtures::ratio_germ(fixtures::gq(2, 1)));
    CHECK(g.type == 1);
    CHECK(std::abs(g.lambda - Complex(2, 1)) < 1e-15);

    Canonical2D r = canonical_form_2d(fixtures::resonant_germ(2));
    CHECK(r.type == 3);
    CHECK(r.m == 2);

    Canonical2D s = canonical_form_2d(diagonal_linear_germ({q(1), q(3)}));
    CHECK(s.type == 2);
    CHECK(s.swapped);
    REQUIRE(s.lambda_exact.has_value());
    CHECK(*s.lambda_exact == 3);
    CHECK(s.resonant_coefficient_abs == 0.0);

    Canonical2D j = canonical_form_2d(fixtures::jordan_quarter());
    CHECK(j.type == 4);
  }
}
