// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "foliage/germ.hpp"

namespace foliage {

/// A[i][j] = coefficient of z_j in f_i.
struct LinearPart {
  int n = 0;
  std::vector<ComplexScalar> entries;  // row-major

  const ComplexScalar& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  ComplexScalar& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  bool is_exact() const;

  static LinearPart from_values(int n, const std::vector<Complex>& row_major);
  static LinearPart from_exact(int n, const std::vector<GaussianRational>& row_major);
};

LinearPart linear_part(const GermPoly& germ);

struct Eigenvalue {
  Complex value;
  std::optional<GaussianRational> exact;

  static Eigenvalue from_exact(const GaussianRational& q) { return {to_complex(q), q}; }
  static Eigenvalue from_value(Complex z) { return {z, std::nullopt}; }
};

/// For n = 2 with a discriminant that is not a square in Q(i): the pair
/// center +- sqrt(radicand), kept exactly.
struct QuadraticPair {
  GaussianRational center;
  GaussianRational radicand;
};

struct EigenSolution {
  std::vector<Eigenvalue> values;
  bool exact = false;                  // every value carries an exact form
  std::optional<QuadraticPair> surd;   // exact algebraic pair (values are its roundings)
  double residual = 0.0;               // max |charpoly(lambda)| on the numeric path
};

/// Roots of the characteristic polynomial with multiplicity. Triangular
/// inputs keep diagonal order; otherwise values are in canonical order.
/// Throws ConvergenceError if refinement fails to reach a small residual.
EigenSolution eigenvalues(const LinearPart& a);

struct PoincareCheck {
  bool poincare = false;
  double c = 0.0;
  std::optional<Rational> c_squared;   // exact on the exact path
  std::optional<Complex> nearest;      // nearest point of the hull to 0
  std::optional<GaussianRational> nearest_exact;
};

PoincareCheck poincare_check(const std::vector<Eigenvalue>& eigs);
PoincareCheck poincare_check(const std::vector<Complex>& eigs);

/// Same-ray and argument-order tests (exact when both sides are exact).
bool same_ray(const Eigenvalue& a, const Eigenvalue& b);
/// Negative, zero or positive as arg(a) is below, equal to or above arg(b),
/// with arguments taken in [0, 2pi).
int compare_argument(const Eigenvalue& a, const Eigenvalue& b);

/// Permutation sorting by increasing argument in [0, 2pi), then modulus.
std::vector<int> canonical_order(const std::vector<Eigenvalue>& eigs);

struct RayConfiguration {
  std::vector<std::vector<int>> parts;  // 0-based indices
  std::vector<double> angles;           // in [0, 2pi), strictly increasing

  std::vector<int> sizes() const;
};

/// Throws NotPoincareError.
RayConfiguration ray_configuration(const std::vector<Eigenvalue>& eigs);
bool ray_config_equivalent(const RayConfiguration& a, const RayConfiguration& b);
bool ray_sizes_equivalent(const std::vector<int>& a, const std::vector<int>& b);

/// Eigenvalue data of a linear part. Eigenvalues are listed in Jordan
/// order: coordinate order when the matrix is already upper bidiagonal with
/// couplings only between equal diagonal entries, canonical order otherwise.
struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;
  bool exact = false;
  std::optional<QuadraticPair> surd;
  bool poincare = false;
  double c = 0.0;
  std::optional<Rational> c_squared;
  std::optional<Complex> nearest;
  std::optional<GaussianRational> nearest_exact;
  std::vector<int> jordan_superdiagonal;  // n-1 flags: 1 where J[i][i+1] != 0
  double residual = 0.0;

  std::vector<Complex> values() const;
  std::vector<int> canonical_order() const;
};

/// Spectrum of a bare eigenvalue list (diagonal linear part).
Spectrum make_spectrum(const std::vector<Eigenvalue>& eigs);
Spectrum make_spectrum(const std::vector<GaussianRational>& eigs);
Spectrum make_spectrum(const std::vector<Complex>& eigs);

/// Spectrum of a germ's linear part (via its Jordan structure).
Spectrum spectrum(const LinearPart& a);
Spectrum spectrum(const GermPoly& germ);

}  // namespace foliage
