// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "foliage/errors.hpp"
#include "foliage/germ.hpp"

using namespace foliage;
using fixtures::q;

namespace {

std::string term(int comp, int e1, int e2, const std::string& coeff) {
  return "{\"component\":" + std::to_string(comp) + ",\"exponents\":[" + std::to_string(e1) + "," +
         std::to_string(e2) + "],\"coeff\":" + coeff + "}";
}

std::string germ_text(const std::vector<std::string>& terms) {
  std::string s = "{\"n\":2,\"terms\":[";
  for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? "," : "") + terms[i];
  return s + "]}";
}

const std::string kTwo = R"({"re":2,"im":0,"exact":["2","0"]})";
const std::string kOne = R"({"re":1,"im":0,"exact":["1","0"]})";

}  // namespace

TEST_SUITE("germ") {
  TEST_CASE("parses a linear diagonal field") {
    GermPoly g = parse_germ(germ_text({term(1, 1, 0, kTwo), term(2, 0, 1, kOne)}));
    CHECK(g.dimension() == 2);
    REQUIRE(g.terms().size() == 2);
    CHECK(g.terms()[0].component == 0);
    CHECK(g.terms()[0].exponents == MultiIndex{1, 0});
    CHECK(g.terms()[0].coeff == q(2));
    CHECK(g.terms()[1].component == 1);
    CHECK(g.terms()[1].exponents == MultiIndex{0, 1});
    CHECK(g.is_exact());
  }

  TEST_CASE("parses the quadratic resonant field") {
    GermPoly g = parse_germ(germ_text({term(1, 1, 0, kTwo), term(1, 0, 2, kOne), term(2, 0, 1, kOne)}));
    CHECK(g.terms().size() == 3);
    const MonomialTerm* t = g.find(0, {0, 2});
    REQUIRE(t != nullptr);
    CHECK(t->coeff == q(1));
    CHECK(g.degree() == 2);
  }

  TEST_CASE("rejects duplicate keys") {
    CHECK_THROWS_AS(parse_germ(germ_text({term(1, 1, 0, kTwo), term(1, 1, 0, kOne), term(2, 0, 1, kOne)})),
                    ParseError);
    CHECK_THROWS_AS(GermPoly(2, {{0, {1, 0}, q(2)}, {0, {1, 0}, q(1)}, {1, {0, 1}, q(1)}}), InvalidGermError);
  }

  TEST_CASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_germ("{\"n\":2,"), ParseError);
    CHECK_THROWS_AS(parse_germ(germ_text({term(3, 1, 0, kTwo)})), ParseError);
    CHECK_THROWS_AS(parse_germ("{\"n\":1,\"terms\":[]}"), ParseError);
    CHECK_THROWS_AS(parse_germ(germ_text({term(1, 0, 2, kOne), term(2, 0, 2, kOne)})), Error);
    CHECK_THROWS_AS(GermPoly(1, {{0, {1}, q(1)}}), InvalidGermError);
    CHECK_THROWS_AS(GermPoly(2, {{0, {0, 2}, q(1)}, {1, {2, 0}, q(1)}}), InvalidGermError);
  }

  TEST_CASE("exact coefficients must match their rounding") {
    std::string bad = R"({"re":0.5,"im":0,"exact":["1/3","0"]})";
    CHECK_THROWS(parse_germ(germ_text({term(1, 1, 0, bad), term(2, 0, 1, kOne)})));
  }

  TEST_CASE("serialization round trip") {
    GermPoly g = fixtures::resonant_germ(3);
    CHECK(parse_germ(serialize_germ(g)) == g);
    GermPoly n = fixtures::numeric_copy(fixtures::jordan_quarter());
    CHECK(parse_germ(serialize_germ(n)) == n);
    CHECK_FALSE(n.is_exact());
  }

  TEST_CASE("evaluation") {
    GermPoly radial = diagonal_linear_germ({q(1), q(1)});
    CVector v = evaluate(radial, {1.0, 0.0});
    CHECK(v[0] == Complex(1.0));
    CHECK(v[1] == Complex(0.0));

    GermPoly f2 = fixtures::resonant_germ(2);
    v = evaluate(f2, {0.0, 1.0});
    CHECK(v[0] == Complex(1.0));
    CHECK(v[1] == Complex(1.0));

    for (const GermPoly& g : {radial, f2, fixtures::jordan_quarter()}) {
      CVector zero = evaluate(g, {0.0, 0.0});
      CHECK(zero[0] == Complex(0.0));
      CHECK(zero[1] == Complex(0.0));
    }
  }

  TEST_CASE("permute and scale") {
    GermPoly g = diagonal_linear_germ({q(2), q(1)});
    GermPoly p = permute(g, {1, 0});
    CHECK(p == diagonal_linear_germ({q(1), q(2)}));
    GermPoly s = scale(g, q(1, 2));
    CHECK(s == diagonal_linear_germ({q(1), q(1, 2)}));
  }
}
