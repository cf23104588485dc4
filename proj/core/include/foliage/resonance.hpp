// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "foliage/spectral.hpp"

namespace foliage {

/// lambda_target = sum_j m_j lambda_j.
struct Resonance {
  int target = 0;  // 0-based
  MultiIndex m;
  bool trivial = false;
  bool essential = false;
  bool exact = false;    // decided in exact arithmetic
  double defect = 0.0;   // |<m,lambda> - lambda_target| on the numeric path

  friend bool operator==(const Resonance& a, const Resonance& b) {
    return a.target == b.target && a.m == b.m;
  }
};

struct ResonanceOptions {
  double tolerance = 1e-8;  // numeric test |<m,lambda> - lambda_i| <= tol (1 + |lambda_i|)
};

/// Every resonance of a Poincare spectrum, trivial ones included, sorted by
/// (target, m). Throws NotPoincareError.
std::vector<Resonance> enumerate_resonances(const Spectrum& spec, const ResonanceOptions& options = {});

/// Target and all eigenvalues used by m lie on one open ray from 0.
bool is_essential(const Resonance& r, const std::vector<Eigenvalue>& eigs);

/// Upper bound on |m| for any resonance: ceil(max|lambda| / c).
int resonance_degree_bound(const Spectrum& spec);

}  // namespace foliage
