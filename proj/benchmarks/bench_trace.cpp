// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>

#include "foliage/sphere_trace.hpp"

namespace {

using namespace foliage;

GermPoly ratio(Complex lambda) {
  return diagonal_linear_germ({ComplexScalar::from_value(lambda), ComplexScalar::from_value(1.0)});
}

void BM_TraceLeaf(benchmark::State& state) {
  GermPoly g = ratio(std::sqrt(2.0));
  TraceOptions o;
  o.t_max = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_leaf(g, {0.6, 0.8}, o));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceLeaf)->RangeMultiplier(10)->Range(10, 1000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_TraceTolerance(benchmark::State& state) {
  GermPoly g = ratio({2.0, 1.0});
  TraceOptions o;
  o.t_max = 100.0;
  o.step_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_leaf(g, {0.6, 0.8}, o));
}
BENCHMARK(BM_TraceTolerance)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ClosureAndSlope(benchmark::State& state) {
  TraceOptions o;
  o.t_max = 1000.0;
  Trajectory tr = trace_leaf(ratio(std::sqrt(2.0)), {0.6, 0.8}, o);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_closure(tr));
    benchmark::DoNotOptimize(slope_estimate(tr));
  }
}
BENCHMARK(BM_ClosureAndSlope)->Unit(benchmark::kMillisecond);

void BM_Holonomy(benchmark::State& state) {
  GermPoly g = ratio(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(holonomy_estimate(g, Axis::X));
}
BENCHMARK(BM_Holonomy)->Unit(benchmark::kMillisecond);

}  // namespace
