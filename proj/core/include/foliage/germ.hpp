// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foliage/rational.hpp"

namespace foliage {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using MultiIndex = std::vector<int>;

/// A coefficient: a double pair plus an optional exact Q(i) value. When the
/// exact value is present, (re, im) is its correctly rounded image.
struct ComplexScalar {
  double re = 0.0;
  double im = 0.0;
  std::optional<GaussianRational> exact;

  static ComplexScalar from_exact(const GaussianRational& q);
  static ComplexScalar from_value(Complex z);

  Complex value() const { return {re, im}; }
  bool is_exact() const { return exact.has_value(); }
  bool is_zero() const { return exact ? exact->is_zero() : (re == 0.0 && im == 0.0); }

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b);
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b);
  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b);
};

/// coeff * z^exponents in component `component` (0-based in memory,
/// 1-based in the file format).
struct MonomialTerm {
  int component = 0;
  MultiIndex exponents;
  ComplexScalar coeff;

  int degree() const;
};

bool term_key_less(const MonomialTerm& a, const MonomialTerm& b);

/// Polynomial vector field sum_i f_i(z) d/dz_i on C^n, n >= 2.
class GermPoly {
 public:
  /// Validates and sorts the terms. Zero coefficients are dropped.
  /// Throws InvalidGermError on bad dimension, exponent-length mismatch,
  /// out-of-range component, duplicate keys or a vanishing linear part.
  GermPoly(int n, std::vector<MonomialTerm> terms);

  int dimension() const { return n_; }
  const std::vector<MonomialTerm>& terms() const { return terms_; }
  bool is_exact() const;
  int degree() const;
  const MonomialTerm* find(int component, const MultiIndex& exponents) const;

  friend bool operator==(const GermPoly& a, const GermPoly& b);

 private:
  int n_;
  std::vector<MonomialTerm> terms_;
};

GermPoly parse_germ(std::string_view text);
GermPoly load_germ(const std::string& path);
std::string serialize_germ(const GermPoly& germ);

/// theta(z).
CVector evaluate(const GermPoly& germ, const CVector& z);

/// Term-list sum (coefficients of equal keys are added).
GermPoly merge(const GermPoly& a, const GermPoly& b);

/// The field multiplied by a constant.
GermPoly scale(const GermPoly& germ, const ComplexScalar& factor);

/// Coordinate relabelling: new coordinate k is old coordinate perm[k].
GermPoly permute(const GermPoly& germ, const std::vector<int>& perm);

/// Builders for common shapes.
GermPoly diagonal_linear_germ(const std::vector<ComplexScalar>& eigenvalues);

}  // namespace foliage
