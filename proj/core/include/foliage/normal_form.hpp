// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "foliage/germ.hpp"
#include "foliage/spectral.hpp"

namespace foliage {

/// P^{-1} A P = J with J upper bidiagonal (Jordan form up to the size of
/// the superdiagonal entries).
struct JordanForm {
  LinearPart J;
  LinearPart P;
  LinearPart P_inverse;
  std::vector<Eigenvalue> eigenvalues;  // diagonal of J
  std::optional<QuadraticPair> surd;
  bool exact = false;
  bool unchanged = false;  // A was already of Jordan shape, P = I
  double condition = 1.0;  // max-norm condition estimate of P
  double residual = 0.0;
};

/// Matrices already upper bidiagonal (couplings only between equal diagonal
/// entries) are returned as is. Otherwise chains are ordered by the
/// canonical eigenvalue order, larger blocks first. Throws ConvergenceError
/// when a numeric Jordan structure cannot be resolved.
JordanForm jordanize(const LinearPart& a);

/// z = forward(w) maps normal-form coordinates to the original ones;
/// w = inverse(z) agrees with its inverse modulo degree > degree.
struct CoordChange {
  int degree = 0;
  GermPoly forward;
  GermPoly inverse;
};

struct ResonantTerm {
  int component = 0;  // 0-based
  MultiIndex exponents;
};

struct NormalFormOptions {
  int degree = 0;                  // 0 selects max(ceil(max|lambda|/c), 2)
  double resonance_tol = 1e-8;     // numeric resonance test, relative to 1+|lambda_i|
  double near_resonance = 1e-12;   // smallest admissible numeric divisor
};

struct NormalFormResult {
  GermPoly normal;
  CoordChange change;
  std::vector<ResonantTerm> resonant_support;  // nonlinear resonant terms present
  Spectrum spectrum;                           // eigenvalues in normal-form coordinates
  bool exact = false;
  int degree = 0;
  double min_divisor = 0.0;  // smallest |<m,lambda> - lambda_i| divided by
};

int default_degree(const Spectrum& s);

/// Throws NotPoincareError, PreconditionError (degree < 2) or
/// NearResonanceError on the numeric path.
NormalFormResult poincare_dulac(const GermPoly& germ, const NormalFormOptions& options = {});

/// Per-coordinate rescaling factors z_i -> eps_i z_i.
struct SuperdiagonalScaling {
  GermPoly germ;
  std::vector<ComplexScalar> factors;
  ComplexScalar target;  // c / (2n)
};

SuperdiagonalScaling normalize_superdiagonal_with_factors(const GermPoly& germ);
GermPoly normalize_superdiagonal(const GermPoly& germ);

/// Two-dimensional canonical type.
struct Canonical2D {
  int type = 0;                          // 1..4
  Complex lambda{0.0, 0.0};              // ratio of the eigenvalues
  std::optional<Rational> lambda_exact;  // when the ratio is a rational number
  bool ratio_exact = false;              // ratio decided in exact arithmetic
  int m = 0;                             // for types 3 and 4
  bool swapped = false;                  // coordinates exchanged
  std::optional<ComplexScalar> original_coefficient;  // y^m coefficient before rescaling
  double resonant_coefficient_abs = 0.0;
  std::optional<RationalityTest> rationality;  // numeric path only
  std::optional<GermPoly> residual;      // canonical representative
};

/// Throws PreconditionError (n != 2) or NotPoincareError.
Canonical2D canonical_form_2d(const GermPoly& germ);

/// Linear change of coordinates z = P w applied to a field: P^{-1} F(P w).
GermPoly conjugate_linear(const GermPoly& germ, const LinearPart& p, const LinearPart& p_inverse);

}  // namespace foliage
