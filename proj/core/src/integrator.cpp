// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

// Dormand-Prince tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                 b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

CVector combine(const CVector& z, double h, std::initializer_list<std::pair<double, const CVector*>> terms) {
  CVector out = z;
  for (const auto& [c, k] : terms) {
    if (c == 0.0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * c * (*k)[i];
  }
  return out;
}

}  // namespace

DormandPrince::DormandPrince(VectorField f, StepControl control) : f_(std::move(f)), control_(control) {}

bool DormandPrince::try_step(CVector& z, double& h, double& taken) {
  if (h < control_.h_min) throw StepCollapseError("step size collapsed below minimum");
  const CVector k1 = f_(z);
  const CVector k2 = f_(combine(z, h, {{a21, &k1}}));
  const CVector k3 = f_(combine(z, h, {{a31, &k1}, {a32, &k2}}));
  const CVector k4 = f_(combine(z, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const CVector k5 = f_(combine(z, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const CVector k6 = f_(combine(z, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  const CVector next = combine(z, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  const CVector k7 = f_(next);

  double err = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    err = std::max({err, std::abs(e.real()), std::abs(e.imag())});
  }
  double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(control_.tol / err, 0.2), 0.2, 5.0);
  if (err <= control_.tol) {
    z = next;
    taken = h;
    h = std::min(h * factor, control_.h_max);
    return true;
  }
  h *= std::min(factor, 0.9);
  if (h < control_.h_min) throw StepCollapseError("step size collapsed below minimum");
  return false;
}

CVector DormandPrince::advance(CVector z, double duration, const std::function<void(CVector&)>& project) {
  double done = 0.0;
  double h = std::min(control_.h_init, control_.h_max);
  while (done < duration) {
    double remaining = duration - done;
    double trial = std::min(h, remaining);
    double taken = 0.0;
    if (try_step(z, trial, taken)) {
      done += taken;
      if (project) project(z);
      if (taken == remaining) break;
    }
    h = trial;
  }
  return z;
}

}  // namespace foliage
