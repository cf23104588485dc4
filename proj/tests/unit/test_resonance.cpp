// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "foliage/errors.hpp"
#include "foliage/resonance.hpp"
#include "oracles.hpp"

using namespace foliage;

namespace {

Spectrum exact(std::initializer_list<std::pair<long long, long long>> v) {
  std::vector<GaussianRational> g;
  for (auto [re, im] : v) g.emplace_back(Rational(re), Rational(im));
  return make_spectrum(g);
}

std::vector<oracle::ResonanceKey> keys(const std::vector<Resonance>& rs, bool nontrivial_only) {
  std::vector<oracle::ResonanceKey> out;
  for (const auto& r : rs)
    if (!nontrivial_only || !r.trivial) out.push_back({r.target, r.m});
  std::sort(out.begin(), out.end());
  return out;
}

const Resonance* find(const std::vector<Resonance>& rs, int target, const MultiIndex& m) {
  for (const auto& r : rs)
    if (r.target == target && r.m == m) return &r;
  return nullptr;
}

}  // namespace

TEST_SUITE("resonance") {
  TEST_CASE("two to one") {
    auto rs = enumerate_resonances(exact({{2, 0}, {1, 0}}));
    CHECK(keys(rs, false) == std::vector<oracle::ResonanceKey>{{0, {0, 2}}, {0, {1, 0}}, {1, {0, 1}}});
    const Resonance* r = find(rs, 0, {0, 2});
    REQUIRE(r);
    CHECK_FALSE(r->trivial);
    CHECK(r->exact);
    CHECK(find(rs, 0, {1, 0})->trivial);
  }

  TEST_CASE("equal eigenvalues") {
    auto rs = enumerate_resonances(exact({{1, 0}, {1, 0}}));
    CHECK(keys(rs, true) == std::vector<oracle::ResonanceKey>{{0, {0, 1}}, {1, {1, 0}}});
  }

  TEST_CASE("complex ray") {
    auto rs = enumerate_resonances(exact({{1, 1}, {2, 2}}));
    CHECK(keys(rs, true) == std::vector<oracle::ResonanceKey>{{1, {2, 0}}});
  }

  TEST_CASE("matches brute force") {
    for (auto spec : {exact({{3, 0}, {1, 0}}), exact({{2, 0}, {1, 1}, {1, -1}}), exact({{1, 0}, {2, 0}, {0, 1}}),
                      exact({{5, 0}, {2, 0}})}) {
      std::vector<oracle::GaussQ> eigs;
      for (const auto& e : spec.eigenvalues) eigs.push_back({e.exact->re(), e.exact->im()});
      auto expected = oracle::brute_force_resonances(eigs, resonance_degree_bound(spec));
      CHECK(keys(enumerate_resonances(spec), false) == expected);
    }
  }

  TEST_CASE("irrational ratio has only trivial resonances") {
    auto rs = enumerate_resonances(make_spectrum(std::vector<Complex>{std::sqrt(2.0), 1.0}));
    CHECK(keys(rs, true).empty());
    CHECK(rs.size() == 2);
  }

  TEST_CASE("essential flags") {
    Spectrum a = exact({{2, 0}, {1, 0}});
    CHECK(is_essential(*find(enumerate_resonances(a), 0, {0, 2}), a.eigenvalues));
    Spectrum b = exact({{1, 1}, {2, 2}});
    CHECK(is_essential(*find(enumerate_resonances(b), 1, {2, 0}), b.eigenvalues));
    Spectrum c = exact({{2, 0}, {1, 1}, {1, -1}});
    const Resonance* r = find(enumerate_resonances(c), 0, {0, 1, 1});
    REQUIRE(r);
    CHECK_FALSE(r->essential);
  }

  TEST_CASE("requires a Poincare spectrum") {
    CHECK_THROWS_AS(enumerate_resonances(exact({{1, 0}, {-1, 0}})), NotPoincareError);
  }
}
