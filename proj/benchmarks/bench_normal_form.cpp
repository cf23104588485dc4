// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "foliage/normal_form.hpp"

namespace {

using namespace foliage;

ComplexScalar q(long long p, long long d = 1) { return ComplexScalar::from_exact(GaussianRational(Rational(p, d))); }

// (m x + x^2 + y^m + x y) d/dx + (y + y^2) d/dy.
GermPoly cluttered(int m) {
  return GermPoly(2, {{0, {1, 0}, q(m)},
                      {0, {2, 0}, q(1)},
                      {0, {1, 1}, q(1, 2)},
                      {0, {0, m}, q(1)},
                      {1, {0, 1}, q(1)},
                      {1, {0, 2}, q(1, 3)}});
}

void BM_PoincareDulacExact(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  GermPoly g = cluttered(3);
  NormalFormOptions o;
  o.degree = degree;
  for (auto _ : state) benchmark::DoNotOptimize(poincare_dulac(g, o));
}
BENCHMARK(BM_PoincareDulacExact)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_PoincareDulacNumeric(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  GermPoly g(2, {{0, {1, 0}, ComplexScalar::from_value({2.3, 0.4})},
                 {0, {2, 0}, ComplexScalar::from_value(0.7)},
                 {0, {0, 2}, ComplexScalar::from_value(0.2)},
                 {1, {0, 1}, ComplexScalar::from_value(1.0)},
                 {1, {1, 1}, ComplexScalar::from_value(-0.4)}});
  NormalFormOptions o;
  o.degree = degree;
  for (auto _ : state) benchmark::DoNotOptimize(poincare_dulac(g, o));
}
BENCHMARK(BM_PoincareDulacNumeric)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_Canonical2D(benchmark::State& state) {
  GermPoly g = cluttered(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form_2d(g));
}
BENCHMARK(BM_Canonical2D)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
