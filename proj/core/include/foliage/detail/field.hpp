// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>

#include "foliage/germ.hpp"
#include "foliage/rational.hpp"

namespace foliage::detail {

// Scalar traits shared by the exact (Q(i)) and floating code paths.
template <class K>
struct Field;

template <>
struct Field<GaussianRational> {
  using K = GaussianRational;
  static constexpr bool exact = true;
  static K zero() { return K{}; }
  static K one() { return K(1); }
  static bool is_zero(const K& a, double = 0.0) { return a.is_zero(); }
  static double magnitude(const K& a) { return std::abs(foliage::to_complex(a)); }
  static Complex to_complex(const K& a) { return foliage::to_complex(a); }
  static K from_scalar(const ComplexScalar& s) { return *s.exact; }
  static ComplexScalar to_scalar(const K& a) { return ComplexScalar::from_exact(a); }
  static K from_int(long long v) { return K(v); }
};

template <>
struct Field<Complex> {
  using K = Complex;
  static constexpr bool exact = false;
  static K zero() { return K(0.0, 0.0); }
  static K one() { return K(1.0, 0.0); }
  static bool is_zero(const K& a, double tol = 0.0) { return std::abs(a) <= tol; }
  static double magnitude(const K& a) { return std::abs(a); }
  static Complex to_complex(const K& a) { return a; }
  static K from_scalar(const ComplexScalar& s) { return s.value(); }
  static ComplexScalar to_scalar(const K& a) { return ComplexScalar::from_value(a); }
  static K from_int(long long v) { return K(static_cast<double>(v), 0.0); }
};

}  // namespace foliage::detail
