// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "foliage/resonance.hpp"
#include "foliage/spectral.hpp"

namespace {

using foliage::GaussianRational;
using foliage::Rational;

void BM_ExactResonances(benchmark::State& state) {
  const auto top = state.range(0);
  std::vector<GaussianRational> eigs{GaussianRational(Rational(top)), GaussianRational(1),
                                     GaussianRational(Rational(2), Rational(1))};
  foliage::Spectrum s = foliage::make_spectrum(eigs);
  for (auto _ : state) benchmark::DoNotOptimize(foliage::enumerate_resonances(s));
}
BENCHMARK(BM_ExactResonances)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

void BM_NumericResonances(benchmark::State& state) {
  const double top = static_cast<double>(state.range(0));
  foliage::Spectrum s = foliage::make_spectrum(std::vector<foliage::Complex>{top + 0.5, 1.0, {2.0, 1.0}});
  for (auto _ : state) benchmark::DoNotOptimize(foliage::enumerate_resonances(s));
}
BENCHMARK(BM_NumericResonances)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

}  // namespace
