// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "foliage/germ.hpp"

namespace fixtures {

using foliage::Complex;
using foliage::ComplexScalar;
using foliage::CVector;
using foliage::GaussianRational;
using foliage::GermPoly;
using foliage::MonomialTerm;
using foliage::Rational;

inline ComplexScalar q(long long p, long long d = 1) { return ComplexScalar::from_exact(GaussianRational(Rational(p, d))); }
inline ComplexScalar gq(long long re, long long im, long long d = 1) {
  return ComplexScalar::from_exact(GaussianRational(Rational(re, d), Rational(im, d)));
}
inline ComplexScalar num(Complex z) { return ComplexScalar::from_value(z); }

// lambda x d/dx + y d/dy.
inline GermPoly ratio_germ(const ComplexScalar& lambda) {
  return foliage::diagonal_linear_germ({lambda, q(1)});
}

// (m x + y^m) d/dx + y d/dy.
inline GermPoly resonant_germ(int m) {
  std::vector<MonomialTerm> t;
  t.push_back({0, {1, 0}, q(m)});
  t.push_back({0, {0, m}, q(1)});
  t.push_back({1, {0, 1}, q(1)});
  return GermPoly(2, t);
}

// (x + y/4) d/dx + y d/dy.
inline GermPoly jordan_quarter() {
  return GermPoly(2, {{0, {1, 0}, q(1)}, {0, {0, 1}, q(1, 4)}, {1, {0, 1}, q(1)}});
}

inline GermPoly numeric_copy(const GermPoly& g) {
  std::vector<MonomialTerm> t;
  for (const auto& term : g.terms()) t.push_back({term.component, term.exponents, num(term.coeff.value())});
  return GermPoly(g.dimension(), t);
}

// Uniform on the unit sphere of C^n, rejecting points with a coordinate
// smaller than `floor` in modulus.
class SphereSampler {
 public:
  explicit SphereSampler(std::uint64_t seed, double floor = 1e-3) : rng_(seed), floor_(floor) {}

  CVector next(int n) {
    std::normal_distribution<double> g;
    for (;;) {
      CVector z(n);
      double r = 0.0;
      for (auto& v : z) {
        v = Complex(g(rng_), g(rng_));
        r += std::norm(v);
      }
      r = std::sqrt(r);
      bool ok = true;
      for (auto& v : z) {
        v /= r;
        ok = ok && std::abs(v) >= floor_;
      }
      if (ok) return z;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  double floor_;
};

}  // namespace fixtures
