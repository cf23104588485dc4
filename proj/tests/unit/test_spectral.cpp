// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "foliage/errors.hpp"
#include "foliage/spectral.hpp"
#include "oracles.hpp"

using namespace foliage;
using fixtures::q;

namespace {

std::vector<GaussianRational> gr(std::initializer_list<std::pair<long long, long long>> v) {
  std::vector<GaussianRational> out;
  for (auto [re, im] : v) out.emplace_back(Rational(re), Rational(im));
  return out;
}

bool has_values(const std::vector<Eigenvalue>& eigs, std::vector<Complex> expected) {
  if (eigs.size() != expected.size()) return false;
  for (const auto& e : eigs) {
    auto it = std::find_if(expected.begin(), expected.end(), [&](Complex z) { return std::abs(z - e.value) < 1e-12; });
    if (it == expected.end()) return false;
    expected.erase(it);
  }
  return true;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("linear part extraction") {
    LinearPart a = linear_part(diagonal_linear_germ({q(2), q(1)}));
    CHECK(a.at(0, 0) == q(2));
    CHECK(a.at(0, 1).is_zero());
    CHECK(a.at(1, 1) == q(1));

    LinearPart j = linear_part(fixtures::jordan_quarter());
    CHECK(j.at(0, 1) == q(1, 4));
    CHECK(j.at(1, 0).is_zero());

    LinearPart r = linear_part(fixtures::resonant_germ(2));
    CHECK(r.at(0, 0) == q(2));
    CHECK(r.at(0, 1).is_zero());
  }

  TEST_CASE("eigenvalues keep multiplicity") {
    EigenSolution d = eigenvalues(LinearPart::from_exact(2, gr({{2, 0}, {0, 0}, {0, 0}, {1, 0}})));
    CHECK(d.exact);
    CHECK(has_values(d.values, {2.0, 1.0}));

    EigenSolution j = eigenvalues(LinearPart::from_exact(2, gr({{1, 0}, {1, 0}, {0, 0}, {1, 0}})));
    CHECK(has_values(j.values, {1.0, 1.0}));

    EigenSolution t = eigenvalues(
        LinearPart::from_exact(3, gr({{2, 0}, {1, 0}, {0, 0}, {0, 0}, {2, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}})));
    CHECK(has_values(t.values, {2.0, 2.0, 1.0}));
  }

  TEST_CASE("rotation block has conjugate eigenvalues") {
    EigenSolution r = eigenvalues(LinearPart::from_exact(2, gr({{0, 0}, {-1, 0}, {1, 0}, {0, 0}})));
    CHECK(has_values(r.values, {Complex(0, 1), Complex(0, -1)}));
  }

  TEST_CASE("irrational pair is kept as a surd") {
    // [[1,1],[1,0]] has eigenvalues (1 +- sqrt 5)/2.
    EigenSolution s = eigenvalues(LinearPart::from_exact(2, gr({{1, 0}, {1, 0}, {1, 0}, {0, 0}})));
    REQUIRE(s.surd.has_value());
    CHECK(has_values(s.values, {(1 + std::sqrt(5.0)) / 2, (1 - std::sqrt(5.0)) / 2}));
  }

  TEST_CASE("Poincare test and constant") {
    PoincareCheck a = poincare_check(make_spectrum(gr({{2, 0}, {1, 0}})).eigenvalues);
    CHECK(a.poincare);
    CHECK(a.c == doctest::Approx(1.0));

    std::vector<Complex> v{1.0, Complex(0, 1)};
    PoincareCheck b = poincare_check(v);
    CHECK(b.poincare);
    double oracle_c = oracle::segment_distance(v);
    CHECK(b.c == doctest::Approx(oracle_c).epsilon(1e-12));
    CHECK(b.c == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    PoincareCheck c = poincare_check(std::vector<Complex>{1.0, -1.0});
    CHECK_FALSE(c.poincare);
    CHECK(c.c == 0.0);
  }

  TEST_CASE("Poincare agrees with the hull oracle") {
    fixtures::SphereSampler s(7);
    for (int k = 0; k < 200; ++k) {
      CVector z = s.next(3);
      std::vector<Complex> v(z.begin(), z.end());
      CHECK(poincare_check(v).poincare == oracle::origin_outside_hull(v));
    }
  }

  TEST_CASE("ray configuration") {
    RayConfiguration r = ray_configuration(make_spectrum(gr({{1, 0}, {2, 0}, {0, 1}})).eigenvalues);
    CHECK(r.sizes() == std::vector<int>{2, 1});
    CHECK(r.parts[0] == std::vector<int>{0, 1});
    CHECK(r.parts[1] == std::vector<int>{2});

    RayConfiguration s = ray_configuration(make_spectrum(gr({{3, 0}, {1, 1}, {2, 2}})).eigenvalues);
    CHECK(s.sizes() == std::vector<int>{1, 2});
    CHECK(s.parts[1] == std::vector<int>{1, 2});

    RayConfiguration t = ray_configuration(make_spectrum(gr({{2, 1}, {1, -3}})).eigenvalues);
    CHECK(t.sizes() == std::vector<int>{1, 1});

    CHECK_THROWS_AS(ray_configuration(make_spectrum(gr({{1, 0}, {-1, 0}})).eigenvalues), NotPoincareError);
  }

  TEST_CASE("ray size equivalence") {
    CHECK(ray_sizes_equivalent({2, 1}, {1, 2}));
    CHECK(ray_sizes_equivalent({2, 1}, {2, 1}));
    CHECK_FALSE(ray_sizes_equivalent({2, 1}, {1, 1, 1}));
    CHECK(ray_sizes_equivalent({3, 1, 2}, {2, 1, 3}));
    CHECK_FALSE(ray_sizes_equivalent({3, 1, 2}, {1, 2, 3}));
    CHECK_FALSE(ray_sizes_equivalent({3, 1, 2}, {1, 3, 2}));
  }

  TEST_CASE("germ spectrum records Jordan coupling") {
    Spectrum s = spectrum(fixtures::jordan_quarter());
    CHECK(s.exact);
    CHECK(s.poincare);
    CHECK(s.jordan_superdiagonal == std::vector<int>{1});
    Spectrum d = spectrum(fixtures::ratio_germ(q(3)));
    CHECK(d.jordan_superdiagonal == std::vector<int>{0});
    CHECK(d.c == doctest::Approx(1.0));
  }
}
