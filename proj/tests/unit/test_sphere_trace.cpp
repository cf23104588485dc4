// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "foliage/errors.hpp"
#include "foliage/sphere_trace.hpp"
#include "oracles.hpp"

using namespace foliage;
using fixtures::q;
using std::numbers::pi;

namespace {

const Complex I(0.0, 1.0);

TraceOptions opts(double t_max, double tol = 1e-9) {
  TraceOptions o;
  o.t_max = t_max;
  o.step_tol = tol;
  return o;
}

GermPoly radial() { return fixtures::ratio_germ(q(1)); }

}  // namespace

TEST_SUITE("sphere-trace") {
  TEST_CASE("direction of the radial field is the Hopf circle") {
    CVector w = intersection_direction(radial(), {1.0, 0.0});
    CHECK(std::abs(w[0] - I) < 1e-15);
    CHECK(std::abs(w[1]) < 1e-15);
    CHECK(radial_pairing(radial(), {1.0, 0.0}) == Complex(1.0));
  }

  TEST_CASE("direction of a diagonal field") {
    Complex a(0.6, 0.1), b = std::sqrt(1.0 - std::norm(a));
    CVector z{a, b};
    CVector w = intersection_direction(fixtures::ratio_germ(q(2)), z);
    Complex ex = I * 2.0 * a, ey = I * b;
    double norm = std::sqrt(std::norm(ex) + std::norm(ey));
    CHECK(std::abs(w[0] - ex / norm) < 1e-14);
    CHECK(std::abs(w[1] - ey / norm) < 1e-14);
    // Tangent to the sphere.
    CHECK(std::abs((w[0] * std::conj(z[0]) + w[1] * std::conj(z[1])).real()) < 1e-15);
  }

  TEST_CASE("tangency and degenerate points") {
    GermPoly saddle = fixtures::ratio_germ(q(-1));
    double s = std::sqrt(0.5);
    CHECK_THROWS_AS(intersection_direction(saddle, {s, s}), TangencyError);
    CHECK_THROWS_AS(normalize_point({0.0, 0.0}), PreconditionError);
  }

  TEST_CASE("resonant fields stay transversal") {
    fixtures::SphereSampler sampler(11);
    for (int m = 1; m <= 4; ++m) {
      GermPoly g = fixtures::resonant_germ(m);
      for (int k = 0; k < 50; ++k) {
        CVector z = sampler.next(2);
        double bound = 1.0 - std::abs(z[0]) * std::pow(std::abs(z[1]), m);
        CHECK(std::abs(radial_pairing(g, z)) >= bound - 1e-14);
      }
    }
  }

  TEST_CASE("Hopf fibre from (1, 0)") {
    Trajectory tr = trace_leaf(radial(), {1.0, 0.0}, opts(10.0));
    for (std::size_t k = 0; k < tr.size(); ++k) {
      CHECK(std::abs(tr.z[k][0] - std::exp(I * tr.t[k])) < 1e-7);
      CHECK(std::abs(tr.z[k][1]) < 1e-15);
    }
    CHECK(tr.max_norm_error < 1e-9);
    CHECK_FALSE(tr.arg_reliable[1]);
  }

  TEST_CASE("radial closure") {
    Trajectory tr = trace_leaf(radial(), {0.6, Complex(0.0, 0.8)}, opts(20.0));
    Closure c = detect_closure(tr);
    REQUIRE(c.closed);
    CHECK(c.period == doctest::Approx(2 * pi).epsilon(1e-8));
    CHECK(c.windings == std::vector<long long>{1, 1});
  }

  TEST_CASE("rational ratio closes with the expected windings") {
    CVector start{0.6, 0.8};
    Trajectory tr = trace_leaf(fixtures::ratio_germ(q(2, 3)), start, opts(60.0));
    Closure c = detect_closure(tr);
    REQUIRE(c.closed);
    CHECK(c.windings == std::vector<long long>{2, 3});
    CHECK(c.winding_residual < 1e-3);
    // Leaf (a e^{i s lambda}, b e^{i s}) closes at s = 6 pi; arc length scales by |(lambda a, b)|.
    double speed = std::hypot(2.0 / 3.0 * 0.6, 0.8);
    CHECK(c.period == doctest::Approx(6 * pi * speed).epsilon(1e-7));
  }

  TEST_CASE("irrational ratio never closes") {
    CVector start{0.6, 0.8};
    GermPoly g = fixtures::ratio_germ(fixtures::num(std::sqrt(2.0)));
    Closure short_run = detect_closure(trace_leaf(g, start, opts(100.0)));
    Closure long_run = detect_closure(trace_leaf(g, start, opts(1000.0)));
    CHECK_FALSE(short_run.closed);
    CHECK_FALSE(long_run.closed);
    CHECK(long_run.min_return_distance > 0.0);
    CHECK(long_run.min_return_distance <= short_run.min_return_distance);
  }

  TEST_CASE("radius profiles") {
    CVector start{Complex(0.5, 0.2), Complex(-0.3, 0.4)};
    start = normalize_point(start);
    CHECK(torus_radius_profile(trace_leaf(fixtures::ratio_germ(q(3, 2)), start, opts(200.0))).kind ==
          ProfileKind::Constant);
    CHECK(torus_radius_profile(trace_leaf(radial(), start, opts(200.0))).kind == ProfileKind::Constant);

    TorusProfile m = torus_radius_profile(trace_leaf(fixtures::ratio_germ(fixtures::gq(2, 1)), start, opts(200.0)));
    CHECK(m.kind == ProfileKind::Monotone);
    CHECK(m.direction != 0);

    Trajectory f2 = trace_full_leaf(fixtures::resonant_germ(2), start, 100.0, 100.0);
    TorusProfile u = torus_radius_profile(f2);
    REQUIRE(u.kind == ProfileKind::UniqueMax);
    CHECK(u.apex_index > 0);
    CHECK(u.apex_index + 1 < f2.size());
  }

  TEST_CASE("apex of a resonant leaf") {
    // Im(a conj(b)^2) = 0 at a real start.
    CVector start{0.6, 0.8};
    Trajectory tr = trace_full_leaf(fixtures::resonant_germ(2), start, 40.0, 40.0, 1e-11);
    ApexResult ap = resonant_apex(tr, 2);
    CHECK(ap.residual < 1e-8);
    CHECK(std::abs(ap.apex[0] - start[0]) < 1e-6);
    CHECK(std::abs(ap.apex[1] - start[1]) < 1e-6);

    fixtures::SphereSampler sampler(3);
    for (int k = 0; k < 5; ++k) {
      Trajectory r = trace_full_leaf(fixtures::resonant_germ(2), sampler.next(2), 60.0, 60.0);
      CHECK(resonant_apex(r, 2).residual < 1e-6);
    }
  }

  TEST_CASE("no apex on the closed leaf") {
    Trajectory tr = trace_full_leaf(fixtures::resonant_germ(2), {1.0, 0.0}, 10.0, 10.0);
    CHECK_THROWS_AS(resonant_apex(tr, 2), PreconditionError);
  }

  TEST_CASE("resonant leaf parametrization") {
    Complex a(0.3, -0.2), b(0.5, 0.4);
    auto [x0, y0] = resonant_leaf_param(a, b, 3, 0.0);
    CHECK(x0 == a);
    CHECK(y0 == b);
    auto [x1, y1] = resonant_leaf_param(a, 0.0, 3, Complex(0.7, 1.1));
    CHECK(std::abs(x1 - a * std::exp(3.0 * Complex(0.7, 1.1))) < 1e-14);
    CHECK(y1 == Complex(0.0));

    auto d = oracle::central_difference(
        [&](Complex t) {
          auto [x, y] = resonant_leaf_param(a, b, 3, t);
          return std::vector<Complex>{x, y};
        },
        0.0, 1e-5);
    CVector theta = evaluate(fixtures::resonant_germ(3), {a, b});
    CHECK(std::abs(d[0] - theta[0]) < 1e-9);
    CHECK(std::abs(d[1] - theta[1]) < 1e-9);
  }

  TEST_CASE("sphere constraint roots") {
    Complex a = 0.6, b = 0.8;
    auto apex = sphere_constraint_solve(a, b, 2, 0.0);
    REQUIRE(apex.size() == 1);
    CHECK(std::abs(apex[0]) < 1e-12);

    CHECK(sphere_constraint_solve(a, b, 2, 50.0).empty());

    Complex ga(0.5, 0.3), gb = std::polar(std::sqrt(1.0 - std::norm(ga)), 0.7);
    double t0 = sphere_constraint_threshold(ga, gb, 2);
    auto two = sphere_constraint_solve(ga, gb, 2, t0 - 1e-3);
    REQUIRE(two.size() == 2);
    double center = -(ga * std::pow(std::conj(gb), 2)).imag() / std::pow(std::norm(gb), 2);
    CHECK((two[0] + two[1]) / 2 == doctest::Approx(center).epsilon(1e-9));
    CHECK(sphere_constraint_solve(ga, gb, 2, t0 + 1e-3).empty());

    CHECK_THROWS_AS(sphere_constraint_solve(1.0, 0.0, 2, 0.0), PreconditionError);
  }

  TEST_CASE("slope estimates") {
    CVector start{0.6, 0.8};
    SlopeEstimate irr = slope_estimate(trace_leaf(fixtures::ratio_germ(fixtures::num(std::sqrt(2.0))), start,
                                                  opts(1000.0)));
    CHECK(std::abs(irr.value - std::sqrt(2.0)) < 1e-2);
    CHECK(irr.crossings_first + irr.crossings_second >= 100);

    SlopeEstimate one = slope_estimate(trace_leaf(radial(), start, opts(1000.0)));
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-2));

    SlopeEstimate r = slope_estimate(trace_leaf(fixtures::ratio_germ(q(2, 3)), start, opts(1000.0)));
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-2));

    CHECK_THROWS_AS(slope_estimate(trace_leaf(radial(), start, opts(50.0))), PreconditionError);
  }

  TEST_CASE("holonomy multipliers") {
    Holonomy half = holonomy_estimate(fixtures::ratio_germ(q(1, 2)), Axis::X);
    REQUIRE(half.returned);
    CHECK(std::abs(half.multiplier + 1.0) < 1e-6);
    CHECK(half.starts.size() >= 5);

    Holonomy id = holonomy_estimate(radial(), Axis::Y);
    REQUIRE(id.returned);
    CHECK(std::abs(id.multiplier - 1.0) < 1e-6);

    Holonomy two_thirds = holonomy_estimate(fixtures::ratio_germ(q(2, 3)), Axis::Y);
    REQUIRE(two_thirds.returned);
    CHECK(std::abs(two_thirds.multiplier + 1.0) < 1e-6);

    CHECK_THROWS_AS(holonomy_estimate(fixtures::resonant_germ(2), Axis::X), PreconditionError);
  }

  TEST_CASE("torus action invariance") {
    GermPoly g = fixtures::ratio_germ(fixtures::gq(2, 1));
    CVector start = normalize_point({Complex(0.5, 0.1), Complex(0.3, -0.6)});
    CHECK(s1s1_invariance_check(g, start, pi / 3, pi / 7) < 1e-6);
    CHECK(s1s1_invariance_check(g, start, 0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(s1s1_invariance_check(fixtures::resonant_germ(2), start, 0.1, 0.2), PreconditionError);
  }

  TEST_CASE("backward traces and csv") {
    Trajectory tr = trace_leaf(fixtures::ratio_germ(q(2)), {0.6, 0.8}, [] {
      TraceOptions o;
      o.t_max = 3.0;
      o.backward = true;
      return o;
    }());
    CHECK(tr.t.front() == doctest::Approx(-3.0));
    CHECK(tr.t.back() == 0.0);
    CHECK(std::abs(tr.z.back()[0] - Complex(0.6)) < 1e-15);

    std::istringstream csv(trajectory_csv(tr));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,re_z1,im_z1,re_z2,im_z2,arg1,arg2,abs1,abs2");
    std::size_t rows = 0;
    for (std::string line; std::getline(csv, line);) ++rows;
    CHECK(rows == tr.size());
  }

  TEST_CASE("orientation self test") { CHECK(orientation_self_test()); }
}
