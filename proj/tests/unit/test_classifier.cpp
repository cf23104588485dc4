// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "foliage/classifier.hpp"
#include "foliage/errors.hpp"

using namespace foliage;
using fixtures::gq;
using fixtures::q;

namespace {

using Tag = EquivClass2D::Tag;

GermPoly diag(std::initializer_list<ComplexScalar> eigs) { return diagonal_linear_germ(eigs); }

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("class table") {
    CHECK(classify_2d(fixtures::ratio_germ(gq(2, 1))).value() == EquivClass2D::generic());
    CHECK(classify_2d(fixtures::resonant_germ(2)).value() == EquivClass2D::resonant(2));
    CHECK(classify_2d(fixtures::jordan_quarter()).value() == EquivClass2D::resonant(1));
    CHECK(classify_2d(diag({q(3), q(1)})).value() == EquivClass2D::rational(3, 1));
    CHECK(classify_2d(diag({q(2), q(3)})).value() == EquivClass2D::rational(3, 2));

    Classification2D irr = classify_2d(fixtures::ratio_germ(fixtures::num(std::sqrt(2.0))));
    REQUIRE(irr.decided());
    CHECK(irr.value().tag == Tag::Irrational);
    CHECK(irr.value().lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(irr.rationality.has_value());
    CHECK(irr.rationality->outcome == RationalityTest::Outcome::Irrational);
  }

  TEST_CASE("exact quadratic surds are irrational") {
    GermPoly g(2, {{0, {1, 0}, q(1)}, {0, {0, 1}, q(1)}, {1, {1, 0}, q(1)}, {1, {0, 1}, q(3)}});
    // eigenvalues 2 +- sqrt 2, both positive
    Classification2D c = classify_2d(g);
    REQUIRE(c.decided());
    CHECK(c.value().tag == Tag::Irrational);
    CHECK(c.value().exact);
    CHECK(c.value().lambda == doctest::Approx((2 + std::sqrt(2.0)) / (2 - std::sqrt(2.0))));
  }

  TEST_CASE("floating ratios carry a rationality witness") {
    Classification2D r = classify_2d(fixtures::ratio_germ(fixtures::num(2.0 / 3.0)));
    REQUIRE(r.decided());
    CHECK(r.value() == EquivClass2D::rational(3, 2));
    REQUIRE(r.rationality.has_value());
    CHECK(r.rationality->witness.p == 3);
    CHECK(r.rationality->witness.q == 2);

    // Within rounding of 100000/99991 but outside the acceptance tolerance.
    Classification2D c = classify_2d(fixtures::ratio_germ(fixtures::num(100000.0 / 99991.0)));
    CHECK_FALSE(c.decided());
    CHECK_THROWS_AS(c.value(), UndecidableError);
    REQUIRE(c.rationality.has_value());
    CHECK(c.rationality->outcome == RationalityTest::Outcome::Undecidable);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(classify_2d(diag({q(1), q(2), q(3)})), PreconditionError);
    CHECK_THROWS_AS(classify_2d(diag({q(1), q(-1)})), NotPoincareError);
  }

  TEST_CASE("pairwise equivalence") {
    CHECK(equivalent_2d(fixtures::ratio_germ(q(2, 3)), fixtures::ratio_germ(q(3, 2))).equivalent());
    CHECK(equivalent_2d(fixtures::resonant_germ(2), fixtures::resonant_germ(3)).result == Verdict::NotEquivalent);
    CHECK(equivalent_2d(fixtures::ratio_germ(gq(2, 1)), fixtures::ratio_germ(gq(1, -3))).equivalent());
    CHECK(equivalent_2d(diag({q(2), q(1)}), fixtures::resonant_germ(2)).result == Verdict::NotEquivalent);
    CHECK(equivalent_2d(fixtures::ratio_germ(fixtures::num(2.0 / 3.0)), fixtures::ratio_germ(q(2, 3))).equivalent());
    CHECK(equivalent_2d(fixtures::ratio_germ(fixtures::num(100000.0 / 99991.0)), fixtures::ratio_germ(q(2, 3)))
              .result == Verdict::Unknown);
  }

  TEST_CASE("pairwise real independence") {
    auto eigs = [](std::vector<Complex> v) {
      std::vector<Eigenvalue> out;
      for (Complex z : v) out.push_back(Eigenvalue::from_value(z));
      return out;
    };
    CHECK_FALSE(pairwise_R_independent(eigs({1.0, 2.0, Complex(0, 1)})));
    CHECK(pairwise_R_independent(eigs({1.0, Complex(0, 1), Complex(-1, 1)})));
    CHECK_FALSE(pairwise_R_independent(eigs({Complex(1, 1), Complex(2, 2)})));
  }

  TEST_CASE("n-dimensional verdicts") {
    NdVerdict a = conjectured_equivalent_nd(diag({q(1), q(2), gq(0, 1)}), diag({gq(0, 1), q(1), q(2)}));
    CHECK(a.result == Verdict::Equivalent);

    NdVerdict b = conjectured_equivalent_nd(diag({q(1), gq(2, 1), gq(1, 2)}), diag({q(3), gq(1, 1), gq(4, -1)}));
    CHECK(b.result == Verdict::Equivalent);

    NdVerdict c = conjectured_equivalent_nd(diag({q(1), q(2), gq(0, 1)}), diag({q(1), gq(0, 1), gq(-1, 1)}));
    CHECK(c.result == Verdict::NotEquivalent);

    NdVerdict d = conjectured_equivalent_nd(diag({q(1), q(2)}), diag({q(1), q(2), q(3)}));
    CHECK(d.result == Verdict::NotEquivalent);

    // Same sizes, but the size-two parts differ: ratio 2 against ratio 3.
    NdVerdict e = conjectured_equivalent_nd(diag({q(1), q(2), gq(0, 1)}), diag({q(1), q(3), gq(0, 1)}));
    CHECK(e.result == Verdict::NotEquivalent);
  }

  TEST_CASE("restriction to a coordinate subspace") {
    GermPoly g(3, {{0, {1, 0, 0}, q(2)}, {0, {0, 0, 2}, q(1)}, {0, {0, 1, 1}, q(1)}, {1, {0, 1, 0}, q(1)},
                   {2, {0, 0, 1}, q(1)}});
    GermPoly r = restrict_to(g, {0, 2});
    CHECK(r == GermPoly(2, {{0, {1, 0}, q(2)}, {0, {0, 2}, q(1)}, {1, {0, 1}, q(1)}}));
  }
}
