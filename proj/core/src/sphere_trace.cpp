// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/sphere_trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);
  return a <= -std::numbers::pi ? a + kTwoPi : a;
}

double distance(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// Real inner product on C^n viewed as R^{2n}.
double real_dot(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] * std::conj(b[i])).real();
  return s;
}

VectorField trace_field(std::shared_ptr<const GermPoly> germ, double sign) {
  return [germ = std::move(germ), sign](const CVector& z) {
    CVector w = intersection_direction(*germ, z);
    if (sign < 0) {
      for (auto& v : w) v = -v;
    }
    return w;
  };
}

void project(CVector& z) {
  double r = 0.0;
  for (const auto& v : z) r += std::norm(v);
  r = std::sqrt(r);
  for (auto& v : z) v /= r;
}

StepControl control_for(double tol, double h_max) {
  StepControl c;
  c.tol = tol;
  c.h_max = h_max;
  return c;
}

// Root of a continuous f on [lo, hi] with f(lo), f(hi) of opposite sign.
template <class F>
double illinois(F&& f, double lo, double hi, double flo, double fhi, int iterations = 60) {
  int side = 0;
  double x = lo;
  for (int it = 0; it < iterations; ++it) {
    x = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    double fx = f(x);
    if (fx == 0.0 || hi - lo < 1e-15 * std::max(1.0, std::abs(x))) return x;
    if ((fx > 0) == (fhi > 0)) {
      hi = x;
      fhi = fx;
      if (side == -1) flo *= 0.5;
      side = -1;
    } else {
      lo = x;
      flo = fx;
      if (side == 1) fhi *= 0.5;
      side = 1;
    }
  }
  return x;
}

void require_plane(const Trajectory& traj, const char* what) {
  if (traj.dimension() != 2) throw PreconditionError(std::string(what) + " needs a two-dimensional trace");
  if (traj.size() < 3) throw PreconditionError(std::string(what) + " needs at least three samples");
}

}  // namespace

Complex radial_pairing(const GermPoly& germ, const CVector& z) {
  CVector th = evaluate(germ, z);
  Complex c = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) c += th[i] * std::conj(z[i]);
  return c;
}

CVector intersection_direction(const GermPoly& germ, const CVector& z) {
  CVector th = evaluate(germ, z);
  Complex c = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) c += th[i] * std::conj(z[i]);
  const double ac = std::abs(c);
  if (!(ac > kTangencyTol)) throw TangencyError("trace foliation is tangent to the sphere", ac);
  const Complex rot = Complex(0.0, 1.0) * std::conj(c) / ac;
  double norm = 0.0;
  for (auto& v : th) {
    v *= rot;
    norm += std::norm(v);
  }
  norm = std::sqrt(norm);
  for (auto& v : th) v /= norm;
  return th;
}

CVector normalize_point(CVector z) {
  double r = 0.0;
  for (const auto& v : z) r += std::norm(v);
  if (!(r > 0.0) || !std::isfinite(r)) throw PreconditionError("cannot normalize the zero vector");
  project(z);
  return z;
}

CVector Trajectory::state_at(double s) const {
  if (t.empty() || s < t.front() || s > t.back()) throw PreconditionError("time outside the trajectory");
  auto it = std::upper_bound(t.begin(), t.end(), s);
  std::size_t k = static_cast<std::size_t>(it - t.begin()) - 1;
  if (t[k] == s) return z[k];
  DormandPrince dp(trace_field(germ, 1.0), control_for(step_tol, 0.25));
  return dp.advance(z[k], s - t[k], project);
}

Trajectory trace_leaf(const GermPoly& germ, const CVector& start, const TraceOptions& options) {
  if (static_cast<int>(start.size()) != germ.dimension()) throw PreconditionError("start dimension mismatch");
  if (!(options.t_max >= 0.0)) throw PreconditionError("t_max must be nonnegative");
  const int n = germ.dimension();
  Trajectory traj;
  traj.germ = std::make_shared<const GermPoly>(germ);
  traj.step_tol = options.step_tol;
  traj.backward = options.backward;
  traj.arg_tracks.assign(n, {});
  traj.radius_tracks.assign(n, {});
  traj.arg_reliable.assign(n, true);

  const double sign = options.backward ? -1.0 : 1.0;
  DormandPrince dp(trace_field(traj.germ, sign), control_for(options.step_tol, options.h_max));

  std::vector<double> last_arg(n, kNaN);
  auto record = [&](double t, const CVector& z) {
    traj.t.push_back(sign * t);
    traj.z.push_back(z);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = std::abs(z[i]);
      r2 += r * r;
      traj.radius_tracks[i].push_back(r);
      if (r < kArgSuspendRadius) {
        traj.arg_reliable[i] = false;
        traj.arg_tracks[i].push_back(kNaN);
        continue;
      }
      const double a = std::arg(z[i]);
      last_arg[i] = std::isnan(last_arg[i]) ? a : last_arg[i] + wrap_angle(a - std::remainder(last_arg[i], kTwoPi));
      traj.arg_tracks[i].push_back(last_arg[i]);
    }
    traj.max_norm_error = std::max(traj.max_norm_error, std::abs(std::sqrt(r2) - 1.0));
    traj.margins.push_back(std::abs(radial_pairing(*traj.germ, z)));
  };

  CVector z = normalize_point(start);
  record(0.0, z);
  double t = 0.0;
  double h = dp.control().h_init;
  while (t < options.t_max) {
    // Limit the argument advance of every coordinate off the axes.
    CVector w = intersection_direction(germ, z);
    double cap = options.h_max;
    for (int i = 0; i < n; ++i) {
      const double r = std::abs(z[i]);
      if (r < kArgSuspendRadius) continue;
      const double rate = std::abs(w[i]) / r;
      if (rate > 0) cap = std::min(cap, 0.125 * std::numbers::pi / rate);
    }
    const double remaining = options.t_max - t;
    double trial = std::min({h, cap, remaining});
    double taken = 0.0;
    if (dp.try_step(z, trial, taken)) {
      t = taken == remaining ? options.t_max : t + taken;
      project(z);
      record(t, z);
    }
    h = trial;
  }

  traj.transversality_margin = *std::min_element(traj.margins.begin(), traj.margins.end());
  if (options.backward) {
    std::reverse(traj.t.begin(), traj.t.end());
    std::reverse(traj.z.begin(), traj.z.end());
    std::reverse(traj.margins.begin(), traj.margins.end());
    for (int i = 0; i < n; ++i) {
      std::reverse(traj.arg_tracks[i].begin(), traj.arg_tracks[i].end());
      std::reverse(traj.radius_tracks[i].begin(), traj.radius_tracks[i].end());
    }
  }
  return traj;
}

Trajectory trace_full_leaf(const GermPoly& germ, const CVector& start, double t_back, double t_forward,
                           double step_tol) {
  TraceOptions opts;
  opts.step_tol = step_tol;
  opts.t_max = t_back;
  opts.backward = true;
  Trajectory out = trace_leaf(germ, start, opts);
  opts.t_max = t_forward;
  opts.backward = false;
  Trajectory fwd = trace_leaf(germ, start, opts);
  out.backward = false;

  const int n = out.dimension();
  for (std::size_t k = 1; k < fwd.size(); ++k) {
    out.t.push_back(fwd.t[k]);
    out.z.push_back(fwd.z[k]);
    out.margins.push_back(fwd.margins[k]);
    for (int i = 0; i < n; ++i) {
      out.arg_tracks[i].push_back(fwd.arg_tracks[i][k]);
      out.radius_tracks[i].push_back(fwd.radius_tracks[i][k]);
    }
  }
  for (int i = 0; i < n; ++i) out.arg_reliable[i] = out.arg_reliable[i] && fwd.arg_reliable[i];
  out.transversality_margin = std::min(out.transversality_margin, fwd.transversality_margin);
  out.max_norm_error = std::max(out.max_norm_error, fwd.max_norm_error);
  return out;
}

std::string trajectory_csv(const Trajectory& traj) {
  const int n = traj.dimension();
  std::ostringstream os;
  os.precision(17);
  os << "t";
  for (int i = 1; i <= n; ++i) os << ",re_z" << i << ",im_z" << i;
  for (int i = 1; i <= n; ++i) os << ",arg" << i;
  for (int i = 1; i <= n; ++i) os << ",abs" << i;
  os << "\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    os << traj.t[k];
    for (int i = 0; i < n; ++i) os << ',' << traj.z[k][i].real() << ',' << traj.z[k][i].imag();
    for (int i = 0; i < n; ++i) {
      const double a = traj.arg_tracks[i][k];
      if (std::isnan(a)) {
        os << ",nan";
      } else {
        os << ',' << a;
      }
    }
    for (int i = 0; i < n; ++i) os << ',' << traj.radius_tracks[i][k];
    os << "\n";
  }
  return os.str();
}

Closure detect_closure(const Trajectory& traj, double delta_close) {
  Closure out;
  const int n = traj.dimension();
  out.windings.assign(n, 0);
  out.winding_reliable = traj.arg_reliable;
  out.min_return_distance = std::numeric_limits<double>::infinity();
  if (traj.size() < 3) return out;

  const CVector& z0 = traj.z.front();
  const CVector w0 = intersection_direction(*traj.germ, z0);
  auto section = [&](const CVector& z) {
    CVector d(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) d[i] = z[i] - z0[i];
    return real_dot(d, w0);
  };

  constexpr double kCapture = 0.3;
  bool left = false;
  bool crossed = false;
  double fallback = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const double dk = distance(traj.z[k], z0);
    if (!left) {
      left = dk > 2.0 * kCapture;
      continue;
    }
    fallback = std::min(fallback, dk);
    if (std::min(dk, distance(traj.z[k - 1], z0)) > kCapture) continue;
    const double s0 = section(traj.z[k - 1]);
    const double s1 = section(traj.z[k]);
    if (!(s0 < 0.0 && s1 >= 0.0)) continue;

    crossed = true;
    const double ta = traj.t[k - 1];
    auto f = [&](double s) { return section(traj.state_at(s)); };
    const double ts = s1 == 0.0 ? traj.t[k] : illinois(f, ta, traj.t[k], s0, s1);
    const CVector zs = traj.state_at(ts);
    const double dist = distance(zs, z0);
    const CVector ws = intersection_direction(*traj.germ, zs);
    const double cosang = real_dot(ws, w0);
    CVector perp(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) perp[i] = ws[i] - cosang * w0[i];
    const double angle = std::atan2(std::sqrt(std::max(0.0, real_dot(perp, perp))), cosang);
    out.min_return_distance = std::min(out.min_return_distance, dist);
    if (dist < delta_close && angle < kCloseAngle) {
      out.closed = true;
      out.period = ts - traj.t.front();
      out.return_distance = dist;
      out.direction_angle = angle;
      out.winding_residual = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!out.winding_reliable[i]) continue;
        const double before = traj.arg_tracks[i][k - 1];
        const double end = before + wrap_angle(std::arg(zs[i]) - std::arg(traj.z[k - 1][i]));
        const double turns = (end - traj.arg_tracks[i].front()) / kTwoPi;
        out.windings[i] = std::llround(turns);
        out.winding_residual = std::max(out.winding_residual, std::abs(turns - out.windings[i]));
      }
      return out;
    }
  }
  if (!crossed) out.min_return_distance = fallback;
  return out;
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Constant: return "Constant";
    case ProfileKind::Monotone: return "Monotone";
    case ProfileKind::UniqueMax: return "UniqueMax";
    case ProfileKind::Ambiguous: return "Ambiguous";
  }
  return "Ambiguous";
}

TorusProfile torus_radius_profile(const Trajectory& traj) {
  require_plane(traj, "torus profile");
  TorusProfile out;
  const auto& rx = traj.radius_tracks[0];
  const auto& ry = traj.radius_tracks[1];
  const std::size_t n = rx.size();

  auto [lo, hi] = std::minmax_element(rx.begin(), rx.end());
  out.spread = *hi - *lo;
  if (out.spread < kConstantRadiusTol) {
    out.kind = ProfileKind::Constant;
    double sum = 0.0;
    for (double r : rx) sum += r;
    out.radius = sum / static_cast<double>(n);
    return out;
  }

  // |x| is monotone iff log|x| - log|y| is; the latter keeps resolution near
  // |x| = 1. Samples that have numerically reached an axis are excluded.
  std::vector<double> rho;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::min(rx[k], ry[k]) < kAxisFloor) break;
    rho.push_back(std::log(rx[k]) - std::log(ry[k]));
  }
  if (rho.size() >= 3) {
    int dir = 0;
    bool monotone = true;
    for (std::size_t k = 1; k < rho.size() && monotone; ++k) {
      const double d = rho[k] - rho[k - 1];
      const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
      if (s == 0 || (dir != 0 && s != dir)) monotone = false;
      dir = s;
    }
    if (monotone) {
      out.kind = ProfileKind::Monotone;
      out.direction = dir;
      if (rho.size() < n) out.detail = "trace reached a coordinate axis";
      return out;
    }
  }

  const std::size_t apex = static_cast<std::size_t>(std::max_element(ry.begin(), ry.end()) - ry.begin());
  if (apex == 0 || apex + 1 == n) {
    out.detail = "maximum of |z_2| at the end of the trace";
    return out;
  }
  for (std::size_t k = 1; k <= apex; ++k) {
    if (!(ry[k] > ry[k - 1])) {
      out.detail = "|z_2| not increasing before the maximum";
      return out;
    }
  }
  for (std::size_t k = apex + 1; k < n; ++k) {
    if (!(ry[k] < ry[k - 1])) {
      out.detail = "|z_2| not decreasing after the maximum";
      return out;
    }
  }
  out.kind = ProfileKind::UniqueMax;
  out.apex_index = apex;
  return out;
}

ApexResult resonant_apex(const Trajectory& traj, int m) {
  if (m < 1) throw PreconditionError("resonance order must be positive");
  const TorusProfile profile = torus_radius_profile(traj);
  if (profile.kind != ProfileKind::UniqueMax)
    throw PreconditionError("apex needs a profile with a unique maximum of |z_2|, got " + to_string(profile.kind));
  const std::size_t k = profile.apex_index;

  // d|y|^2/dt up to a factor 2.
  auto slope = [&](const CVector& z) {
    const CVector w = intersection_direction(*traj.germ, z);
    return (std::conj(z[1]) * w[1]).real();
  };
  auto f = [&](double s) { return slope(traj.state_at(s)); };

  // Quadratic fit through the three samples around the maximum as first guess.
  const double t0 = traj.t[k - 1], t1 = traj.t[k], t2 = traj.t[k + 1];
  const double y0 = traj.radius_tracks[1][k - 1], y1 = traj.radius_tracks[1][k], y2 = traj.radius_tracks[1][k + 1];
  const double d01 = (y1 - y0) / (t1 - t0), d12 = (y2 - y1) / (t2 - t1);
  const double curv = (d12 - d01) / (t2 - t0);
  double guess = curv < 0 ? 0.5 * (t0 + t1) - d01 / (2.0 * curv) : t1;
  guess = std::clamp(guess, t0, t2);

  double lo = t0, hi = t2;
  double flo = f(lo), fhi = f(hi);
  const double fg = f(guess);
  if (fg == 0.0) {
    lo = hi = guess;
  } else if ((fg > 0) == (flo > 0)) {
    lo = guess;
    flo = fg;
  } else {
    hi = guess;
    fhi = fg;
  }
  double ts = lo;
  if (lo != hi) {
    if ((flo > 0) == (fhi > 0)) throw PreconditionError("apex bracket lost: profile is ambiguous");
    ts = illinois(f, lo, hi, flo, fhi);
  }
  ApexResult out;
  out.t = ts;
  out.apex = traj.state_at(ts);
  out.residual = std::abs((out.apex[0] * std::pow(std::conj(out.apex[1]), m)).imag());
  return out;
}

std::pair<Complex, Complex> resonant_leaf_param(Complex a, Complex b, int m, Complex t) {
  return {(a + std::pow(b, m) * t) * std::exp(static_cast<double>(m) * t), b * std::exp(t)};
}

namespace {

struct Quadratic {
  double a2, a1, a0;
  double a0_scale;  // sum of the moduli of the summands of a0
};

Quadratic sphere_constraint(Complex a, Complex b, int m, double t_r) {
  if (b == Complex(0.0, 0.0)) throw PreconditionError("sphere constraint is degenerate for b = 0");
  const Complex bm = std::pow(b, m);
  const double bb = std::norm(b);
  const double md = static_cast<double>(m);
  Quadratic q;
  q.a2 = std::norm(bm);
  q.a1 = 2.0 * (a * std::conj(bm)).imag();
  const double parts[] = {std::norm(a), 2.0 * (bm * std::conj(a)).real() * t_r, q.a2 * t_r * t_r,
                          bb * std::exp(2.0 * (1.0 - md) * t_r), -std::exp(-2.0 * md * t_r)};
  q.a0 = 0.0;
  q.a0_scale = 0.0;
  for (double v : parts) {
    q.a0 += v;
    q.a0_scale += std::abs(v);
  }
  return q;
}

double discriminant(const Quadratic& q) { return q.a1 * q.a1 - 4.0 * q.a2 * q.a0; }

}  // namespace

std::vector<double> sphere_constraint_solve(Complex a, Complex b, int m, double t_r) {
  const Quadratic q = sphere_constraint(a, b, m, t_r);
  const double disc = discriminant(q);
  const double scale = q.a1 * q.a1 + 4.0 * q.a2 * q.a0_scale;
  const double center = -q.a1 / (2.0 * q.a2);
  if (std::abs(disc) <= 1e-12 * std::max(scale, 1e-300)) return {center};
  if (disc < 0) return {};
  const double half = std::sqrt(disc) / (2.0 * q.a2);
  return {center - half, center + half};
}

double sphere_constraint_threshold(Complex a, Complex b, int m) {
  auto disc = [&](double t) { return discriminant(sphere_constraint(a, b, m, t)); };
  double lo = 0.0;
  while (disc(lo) < 0) lo -= 1.0;
  double hi = std::max(lo, 0.0) + 1.0;
  while (disc(hi) >= 0) hi += 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (disc(mid) >= 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SlopeEstimate slope_estimate(const Trajectory& traj) {
  require_plane(traj, "slope estimate");
  if (!traj.arg_reliable[0] || !traj.arg_reliable[1])
    throw PreconditionError("slope estimate needs a trace off the coordinate axes");
  const auto& ax = traj.arg_tracks[0];
  const auto& ay = traj.arg_tracks[1];
  const std::size_t n = traj.size();
  std::vector<long long> cx(n, 0), cy(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    cx[k] = cx[k - 1] + std::llabs(static_cast<long long>(std::floor(ax[k] / kTwoPi)) -
                                   static_cast<long long>(std::floor(ax[k - 1] / kTwoPi)));
    cy[k] = cy[k - 1] + std::llabs(static_cast<long long>(std::floor(ay[k] / kTwoPi)) -
                                   static_cast<long long>(std::floor(ay[k - 1] / kTwoPi)));
  }
  if (cx.back() + cy.back() < 100)
    throw PreconditionError("insufficient crossings for a slope estimate: " + std::to_string(cx.back() + cy.back()));

  // Stop at the best return to the starting arguments in the second half.
  std::size_t best = n - 1;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = n / 2; k < n; ++k) {
    if (cy[k] == 0) continue;
    const double d = std::abs(wrap_angle(ax[k] - ax[0])) + std::abs(wrap_angle(ay[k] - ay[0]));
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  // Close the curve with a short arc: the counts become rounded windings.
  SlopeEstimate out;
  out.crossings_first = std::llround(std::abs(ax[best] - ax[0]) / kTwoPi);
  out.crossings_second = std::llround(std::abs(ay[best] - ay[0]) / kTwoPi);
  if (out.crossings_second == 0) throw PreconditionError("no crossings of the second argument marker");
  out.value = static_cast<double>(out.crossings_first) / static_cast<double>(out.crossings_second);
  out.t_used = traj.t[best] - traj.t.front();
  out.torus_distance = best_d;
  return out;
}

Holonomy holonomy_estimate(const GermPoly& germ, Axis axis, double disk_radius, double t_max, double step_tol) {
  if (germ.dimension() != 2) throw PreconditionError("holonomy needs a two-dimensional germ");
  if (!(disk_radius > 0.0 && disk_radius < 1.0)) throw PreconditionError("disk radius must lie in (0, 1)");
  const int tr = axis == Axis::X ? 0 : 1;
  const int al = 1 - tr;
  for (const auto& term : germ.terms()) {
    if (term.component == tr && term.exponents[tr] == 0)
      throw PreconditionError("the chosen axis is not a leaf of the germ");
  }

  auto shared = std::make_shared<const GermPoly>(germ);
  DormandPrince dp(trace_field(shared, 1.0), control_for(step_tol, 0.05));
  Holonomy out;
  out.returned = true;
  constexpr int kRadii = 5;
  for (int k = 1; k <= kRadii; ++k) {
    const double rad = disk_radius * k / kRadii;
    CVector z(2);
    z[tr] = std::polar(rad, kTwoPi * k / kRadii + 0.3);
    z[al] = std::sqrt(1.0 - rad * rad);
    const Complex start = z[tr];

    double t = 0.0, h = 1e-2, turned = 0.0;
    bool done = false;
    while (t < t_max) {
      const CVector prev = z;
      double trial = std::min(h, t_max - t), taken = 0.0;
      if (!dp.try_step(z, trial, taken)) {
        h = trial;
        continue;
      }
      h = trial;
      project(z);
      t += taken;
      const double before = turned;
      turned += wrap_angle(std::arg(z[al]) - std::arg(prev[al]));
      if (std::abs(turned) >= kTwoPi) {
        const double target = turned > 0 ? kTwoPi : -kTwoPi;
        auto f = [&](double s) {
          const CVector q = dp.advance(prev, s, project);
          return before + wrap_angle(std::arg(q[al]) - std::arg(prev[al])) - target;
        };
        const double s = illinois(f, 0.0, taken, before - target, turned - target);
        const CVector hit = dp.advance(prev, s, project);
        out.starts.push_back(start);
        out.returns.push_back(hit[tr]);
        done = true;
        break;
      }
    }
    if (!done) out.returned = false;
  }
  if (out.starts.empty()) return out;

  Complex num = 0.0;
  double den = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < out.starts.size(); ++i) {
    num += out.returns[i] * std::conj(out.starts[i]);
    den += std::norm(out.starts[i]);
    drift += std::log(std::abs(out.returns[i]) / std::abs(out.starts[i]));
  }
  out.multiplier = num / den;
  double res = 0.0;
  for (std::size_t i = 0; i < out.starts.size(); ++i) res += std::norm(out.returns[i] - out.multiplier * out.starts[i]);
  out.residual = std::sqrt(res / den);
  out.drift = drift / static_cast<double>(out.starts.size());
  return out;
}

double s1s1_invariance_check(const GermPoly& germ, const CVector& start, double t1, double t2, double t_max,
                             double step_tol) {
  if (germ.dimension() != 2) throw PreconditionError("torus action check needs a two-dimensional germ");
  for (const auto& term : germ.terms()) {
    if (term.degree() != 1 || term.exponents[term.component] != 1)
      throw PreconditionError("torus action check needs a diagonal linear germ");
  }
  TraceOptions opts;
  opts.t_max = t_max;
  opts.step_tol = step_tol;
  const CVector rot{std::polar(1.0, t1), std::polar(1.0, t2)};
  const CVector base = normalize_point(start);
  CVector moved{base[0] * rot[0], base[1] * rot[1]};
  const Trajectory first = trace_leaf(germ, base, opts);
  const Trajectory second = trace_leaf(germ, moved, opts);
  double dev = 0.0;
  for (std::size_t k = 0; k < second.size(); ++k) {
    const CVector p = first.state_at(second.t[k]);
    const CVector q{p[0] * rot[0], p[1] * rot[1]};
    dev = std::max(dev, distance(q, second.z[k]));
  }
  return dev;
}

bool orientation_self_test() {
  const GermPoly radial = diagonal_linear_germ({ComplexScalar::from_exact(1), ComplexScalar::from_exact(1)});
  TraceOptions opts;
  opts.t_max = 1.0;
  const Trajectory traj = trace_leaf(radial, {0.6, 0.8}, opts);
  for (int i = 0; i < 2; ++i) {
    if (!(traj.arg_tracks[i].back() - traj.arg_tracks[i].front() > 0.5)) return false;
  }
  return true;
}

}  // namespace foliage
