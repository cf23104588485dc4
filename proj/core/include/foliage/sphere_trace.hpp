// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foliage/germ.hpp"
#include "foliage/integrator.hpp"

namespace foliage {

inline constexpr double kTangencyTol = 1e-9;
inline constexpr double kArgSuspendRadius = 1e-6;

/// <theta(z), z> = sum_i theta_i(z) conj(z_i).
Complex radial_pairing(const GermPoly& germ, const CVector& z);

/// Unit tangent of the oriented trace foliation at z. Throws TangencyError.
CVector intersection_direction(const GermPoly& germ, const CVector& z);

/// Projects onto the unit sphere. Throws PreconditionError for z = 0.
CVector normalize_point(CVector z);

struct TraceOptions {
  double t_max = 1000.0;
  double step_tol = 1e-9;
  bool backward = false;
  double h_max = 0.25;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<CVector> z;
  /// Unwrapped arguments per coordinate; NaN while |z_i| < kArgSuspendRadius.
  std::vector<std::vector<double>> arg_tracks;
  std::vector<std::vector<double>> radius_tracks;
  /// False for coordinates whose argument was suspended at some sample.
  std::vector<bool> arg_reliable;
  /// |<theta(z), z>| per sample.
  std::vector<double> margins;
  double transversality_margin = 0.0;
  double max_norm_error = 0.0;
  bool backward = false;

  std::shared_ptr<const GermPoly> germ;
  double step_tol = 1e-9;

  std::size_t size() const { return t.size(); }
  int dimension() const { return z.empty() ? 0 : static_cast<int>(z.front().size()); }
  /// State at time s (within [t.front(), t.back()]) by re-integration from the
  /// nearest earlier sample.
  CVector state_at(double s) const;
};

/// Integrates the trace flow from `start` (normalized first) for t_max.
/// Backward traces negate the field; samples are stored with t in [-t_max, 0].
Trajectory trace_leaf(const GermPoly& germ, const CVector& start, const TraceOptions& options);

/// Joins a backward and a forward trace through `start`.
Trajectory trace_full_leaf(const GermPoly& germ, const CVector& start, double t_back, double t_forward,
                           double step_tol = 1e-9);

/// Writes `t,re_z1,im_z1,...,arg1..argn,abs1..absn`.
std::string trajectory_csv(const Trajectory& traj);

struct Closure {
  bool closed = false;
  double period = 0.0;
  std::vector<long long> windings;
  std::vector<bool> winding_reliable;
  double winding_residual = 0.0;
  double return_distance = 0.0;  // |z(period) - z(0)| when closed
  double direction_angle = 0.0;
  double min_return_distance = 0.0;  // NotClosed
};

inline constexpr double kCloseDistance = 1e-6;
inline constexpr double kCloseAngle = 1e-4;

Closure detect_closure(const Trajectory& traj, double delta_close = kCloseDistance);

enum class ProfileKind { Constant, Monotone, UniqueMax, Ambiguous };
std::string to_string(ProfileKind kind);

struct TorusProfile {
  ProfileKind kind = ProfileKind::Ambiguous;
  double radius = 0.0;           // Constant: mean |z_1|
  double spread = 0.0;           // max - min of |z_1|
  std::size_t apex_index = 0;    // UniqueMax: sample maximizing |z_2|
  int direction = 0;             // Monotone: +1 if |z_1| increases
  std::string detail;
};

inline constexpr double kConstantRadiusTol = 1e-6;
/// Radius below which a sample counts as lying on a coordinate axis.
inline constexpr double kAxisFloor = 1e-200;

TorusProfile torus_radius_profile(const Trajectory& traj);

struct ApexResult {
  CVector apex;
  double t = 0.0;
  double residual = 0.0;  // |Im(a conj(b)^m)|
};

/// Requires a UniqueMax profile. Throws PreconditionError otherwise.
ApexResult resonant_apex(const Trajectory& traj, int m);

/// ((a + b^m t) e^{mt}, b e^t).
std::pair<Complex, Complex> resonant_leaf_param(Complex a, Complex b, int m, Complex t);

/// Real roots t_I of the sphere constraint at fixed t_R, ascending.
/// Throws PreconditionError when b = 0.
std::vector<double> sphere_constraint_solve(Complex a, Complex b, int m, double t_r);

/// Largest t_R with a real root, found by bisection on the discriminant.
double sphere_constraint_threshold(Complex a, Complex b, int m);

struct SlopeEstimate {
  double value = 0.0;
  long long crossings_first = 0;   // arg z_1 through multiples of 2 pi
  long long crossings_second = 0;  // arg z_2 through multiples of 2 pi
  double t_used = 0.0;
  double torus_distance = 0.0;
};

/// Throws PreconditionError when fewer than 100 crossings are available.
SlopeEstimate slope_estimate(const Trajectory& traj);

enum class Axis { X, Y };  // X: the closed leaf {x = 0}; Y: the leaf {y = 0}

struct Holonomy {
  bool returned = false;
  Complex multiplier = 0.0;
  double residual = 0.0;
  double drift = 0.0;  // mean log(|return| / |start|) per return
  std::vector<Complex> starts;
  std::vector<Complex> returns;
};

Holonomy holonomy_estimate(const GermPoly& germ, Axis axis, double disk_radius = 1e-2, double t_max = 1000.0,
                           double step_tol = 1e-11);

/// Requires a diagonal linear two-dimensional germ. Returns the maximal
/// pointwise deviation between the rotated first trace and the second.
double s1s1_invariance_check(const GermPoly& germ, const CVector& start, double t1, double t2, double t_max = 20.0,
                             double step_tol = 1e-10);

/// True when the traced leaf of x d/dx + y d/dy rotates counterclockwise in
/// both coordinates.
bool orientation_self_test();

}  // namespace foliage
