// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "foliage/germ.hpp"

namespace foliage {

/// Autonomous ODE z' = f(z) on C^n.
using VectorField = std::function<CVector(const CVector&)>;

struct StepControl {
  double tol = 1e-9;    // max-abs local error bound per accepted step
  double h_init = 1e-2;
  double h_max = 0.25;
  double h_min = 1e-12;
};

/// Embedded Dormand-Prince 5(4) pair with local extrapolation.
class DormandPrince {
 public:
  DormandPrince(VectorField f, StepControl control);

  /// Attempts one step of size h from z. On success z holds the new state,
  /// `taken` the step used and h the proposed next step. On rejection z is
  /// unchanged and h is reduced. Throws StepCollapseError below h_min.
  bool try_step(CVector& z, double& h, double& taken);

  /// Integrates exactly `duration` (>= 0) from z, with projection applied
  /// after each accepted step when `project` is set.
  CVector advance(CVector z, double duration, const std::function<void(CVector&)>& project = {});

  const StepControl& control() const { return control_; }

 private:
  VectorField f_;
  StepControl control_;
};

}  // namespace foliage
