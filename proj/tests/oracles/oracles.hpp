// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Independent reference computations for tests. Nothing here calls into the
// library under test.
namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using C = std::complex<double>;

struct GaussQ {
  Q re;
  Q im;
};

struct ResonanceKey {
  int target;
  std::vector<int> m;
  friend bool operator<(const ResonanceKey& a, const ResonanceKey& b) {
    return a.target != b.target ? a.target < b.target : a.m < b.m;
  }
  friend bool operator==(const ResonanceKey& a, const ResonanceKey& b) { return a.target == b.target && a.m == b.m; }
};

// Every (i, m) with |m| <= max_order and sum m_j lambda_j = lambda_i, exact.
std::vector<ResonanceKey> brute_force_resonances(const std::vector<GaussQ>& eigs, int max_order);

// Numeric version with |<m,lambda> - lambda_i| <= tol (1 + |lambda_i|).
std::vector<ResonanceKey> brute_force_resonances(const std::vector<C>& eigs, int max_order, double tol);

// 0 lies outside the convex hull iff the arguments leave a gap wider than pi.
bool origin_outside_hull(const std::vector<C>& pts);

// Minimum over vertices and pairwise segments of the distance to 0. Equals the
// hull distance whenever 0 lies outside the hull.
double segment_distance(const std::vector<C>& pts);

// Closed-form eigenvalues of [[a, b], [c, d]].
std::array<C, 2> eigenvalues_2x2(C a, C b, C c, C d);

// Central difference of f at t along direction h.
std::vector<C> central_difference(const std::function<std::vector<C>(C)>& f, C t, double h);

// Fixed-step classical RK4 for z' = dir * f(z).
std::vector<C> rk4_flow(const std::function<std::vector<C>(const std::vector<C>&)>& f, std::vector<C> z, C dir,
                        double t_end, int steps);

}  // namespace oracle
