// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "foliage/detail/linalg.hpp"
#include "foliage/errors.hpp"
#include "foliage/normal_form.hpp"

namespace foliage {

namespace {

using detail::Field;
using detail::Matrix;

constexpr double kRayTol = 1e-9;
constexpr double kClusterTol = 1e-5;
constexpr double kResidualLimit = 1e-8;

template <class K>
Matrix<K> to_matrix(const LinearPart& a) {
  Matrix<K> m(a.n, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) m(i, j) = Field<K>::from_scalar(a.at(i, j));
  return m;
}

bool is_triangular(const LinearPart& a) {
  bool upper = true, lower = true;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      if (i > j) upper = false;
      if (i < j) lower = false;
    }
  return upper || lower;
}

// Roots of a monic polynomial (coefficients x^0..x^n) via the companion
// matrix, polished by Newton steps.
std::vector<Complex> companion_roots(const std::vector<Complex>& coeff) {
  const int n = static_cast<int>(coeff.size()) - 1;
  if (n == 0) return {};
  if (n == 1) return {-coeff[0]};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) c(0, j) = -coeff[n - 1 - j];
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigen-solver failed", INFINITY);
  std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  std::vector<Complex> deriv(n);
  for (int k = 1; k <= n; ++k) deriv[k - 1] = coeff[k] * static_cast<double>(k);
  for (auto& r : roots) {
    for (int it = 0; it < 30; ++it) {
      Complex p = detail::evaluate_polynomial(coeff, r);
      Complex dp = detail::evaluate_polynomial(deriv, r);
      if (std::abs(dp) < 1e-300) break;
      Complex next = r - p / dp;
      if (std::abs(detail::evaluate_polynomial(coeff, next)) >= std::abs(p)) break;
      r = next;
    }
  }
  return roots;
}

double relative_residual(const std::vector<Complex>& coeff, Complex x) {
  double scale = 0.0, pw = 1.0;
  for (const auto& c : coeff) {
    scale += std::abs(c) * pw;
    pw *= std::abs(x);
  }
  return std::abs(detail::evaluate_polynomial(coeff, x)) / std::max(scale, 1e-300);
}

// Best rational candidate for x with denominator up to max_den.
std::optional<Rational> rational_candidate(double x, long long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  double frac = x;
  Integer h_prev = 1, h = static_cast<long long>(std::floor(frac));
  Integer k_prev = 0, k = 1;
  double rest = frac - std::floor(frac);
  for (int it = 0; it < 64; ++it) {
    Rational cand(h, k);
    if (std::abs(to_double(cand) - x) <= tol * std::max(1.0, std::abs(x))) return cand;
    if (rest < 1e-300) break;
    rest = 1.0 / rest;
    double a = std::floor(rest);
    rest -= a;
    Integer ai = static_cast<long long>(a);
    Integer hn = ai * h + h_prev, kn = ai * k + k_prev;
    if (kn > max_den) break;
    h_prev = h;
    k_prev = k;
    h = hn;
    k = kn;
  }
  return std::nullopt;
}

using QPoly = std::vector<GaussianRational>;

void trim(QPoly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

QPoly poly_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
    GaussianRational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    a.pop_back();
    trim(a);
    if (a.empty()) a.push_back(GaussianRational{});
  }
  return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!(b.size() == 1 && b[0].is_zero())) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  GaussianRational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

QPoly poly_div_exact(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {GaussianRational(1)};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    GaussianRational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    a.pop_back();
  }
  return q;
}

// Exact roots of an exact characteristic polynomial when they all lie in Q(i).
std::optional<std::vector<GaussianRational>> exact_roots(const QPoly& charpoly) {
  const int n = static_cast<int>(charpoly.size()) - 1;
  QPoly deriv(n);
  for (int k = 1; k <= n; ++k) deriv[k - 1] = charpoly[k] * GaussianRational(k);
  QPoly g = poly_gcd(charpoly, deriv);
  QPoly squarefree = poly_div_exact(charpoly, g);
  std::vector<Complex> approx_coeff;
  for (const auto& c : squarefree) approx_coeff.push_back(to_complex(c));
  GaussianRational lead = squarefree.back();
  for (auto& c : approx_coeff) c /= to_complex(lead);

  std::vector<GaussianRational> out;
  QPoly rest = charpoly;
  for (const auto& r : companion_roots(approx_coeff)) {
    auto re = rational_candidate(r.real(), 1'000'000, 1e-9);
    auto im = rational_candidate(r.imag(), 1'000'000, 1e-9);
    if (!re || !im) return std::nullopt;
    GaussianRational q(*re, *im);
    if (!detail::evaluate_polynomial(squarefree, q).is_zero()) return std::nullopt;
    while (rest.size() > 1 && detail::evaluate_polynomial(rest, q).is_zero()) {
      rest = detail::deflate(rest, q);
      out.push_back(q);
    }
  }
  if (static_cast<int>(out.size()) != n) return std::nullopt;
  return out;
}

void sort_canonical(std::vector<Eigenvalue>& v) {
  auto order = canonical_order(v);
  std::vector<Eigenvalue> sorted;
  for (int k : order) sorted.push_back(v[k]);
  v = std::move(sorted);
}

// Points in the plane for the hull computation.
template <class T>
struct Pt {
  T x, y;
};

template <class T>
T cross(const Pt<T>& o, const Pt<T>& a, const Pt<T>& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

template <class T>
std::vector<Pt<T>> convex_hull(std::vector<Pt<T>> pts) {
  std::sort(pts.begin(), pts.end(), [](const Pt<T>& a, const Pt<T>& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Pt<T>& a, const Pt<T>& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt<T>> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Nearest point to the origin on the segment [a, b].
template <class T>
Pt<T> nearest_on_segment(const Pt<T>& a, const Pt<T>& b) {
  T dx = b.x - a.x, dy = b.y - a.y;
  T dd = dx * dx + dy * dy;
  if (dd == 0) return a;
  T t = -(a.x * dx + a.y * dy) / dd;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return {a.x + t * dx, a.y + t * dy};
}

template <class T>
Pt<T> nearest_to_origin(const std::vector<Pt<T>>& hull, bool& contains) {
  contains = false;
  if (hull.size() == 1) return hull[0];
  if (hull.size() == 2) {
    Pt<T> p = nearest_on_segment(hull[0], hull[1]);
    contains = p.x == 0 && p.y == 0;
    return p;
  }
  Pt<T> origin{T(0), T(0)};
  bool inside = true;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], origin) < 0) inside = false;
  }
  if (inside) {
    contains = true;
    return origin;
  }
  Pt<T> best = nearest_on_segment(hull[0], hull[1]);
  T best_d = best.x * best.x + best.y * best.y;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Pt<T> p = nearest_on_segment(hull[i], hull[(i + 1) % hull.size()]);
    T d = p.x * p.x + p.y * p.y;
    if (d < best_d) {
      best = p;
      best_d = d;
    }
  }
  return best;
}

int half_plane(const Eigenvalue& a) {
  if (a.exact) {
    const auto& q = *a.exact;
    return (q.im() > 0 || (q.im() == 0 && q.re() > 0)) ? 0 : 1;
  }
  double mag = std::abs(a.value);
  if (std::abs(a.value.imag()) <= kRayTol * mag) return a.value.real() > 0 ? 0 : 1;
  return a.value.imag() > 0 ? 0 : 1;
}

}  // namespace

bool LinearPart::is_exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const ComplexScalar& s) { return s.is_exact(); });
}

LinearPart LinearPart::from_values(int n, const std::vector<Complex>& row_major) {
  LinearPart a{n, {}};
  for (const auto& v : row_major) a.entries.push_back(ComplexScalar::from_value(v));
  return a;
}

LinearPart LinearPart::from_exact(int n, const std::vector<GaussianRational>& row_major) {
  LinearPart a{n, {}};
  for (const auto& v : row_major) a.entries.push_back(ComplexScalar::from_exact(v));
  return a;
}

LinearPart linear_part(const GermPoly& germ) {
  const int n = germ.dimension();
  LinearPart a{n, std::vector<ComplexScalar>(static_cast<std::size_t>(n) * n, ComplexScalar::from_exact(0))};
  for (const auto& t : germ.terms()) {
    if (t.degree() != 1) continue;
    int j = static_cast<int>(std::find(t.exponents.begin(), t.exponents.end(), 1) - t.exponents.begin());
    a.at(t.component, j) = t.coeff;
  }
  return a;
}

EigenSolution eigenvalues(const LinearPart& a) {
  EigenSolution out;
  const int n = a.n;
  const bool exact = a.is_exact();

  if (is_triangular(a)) {
    for (int i = 0; i < n; ++i) {
      const auto& d = a.at(i, i);
      out.values.push_back(d.exact ? Eigenvalue::from_exact(*d.exact) : Eigenvalue::from_value(d.value()));
    }
    out.exact = exact;
    return out;
  }

  if (exact) {
    auto m = to_matrix<GaussianRational>(a);
    if (n == 2) {
      GaussianRational tr = m(0, 0) + m(1, 1);
      GaussianRational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      GaussianRational disc = tr * tr - GaussianRational(4) * det;
      if (auto s = gaussian_sqrt(disc)) {
        GaussianRational half(Rational(1, 2));
        out.values = {Eigenvalue::from_exact((tr + *s) * half), Eigenvalue::from_exact((tr - *s) * half)};
        out.exact = true;
      } else {
        QuadraticPair pair{tr * GaussianRational(Rational(1, 2)), disc * GaussianRational(Rational(1, 4))};
        Complex center = to_complex(pair.center), root = std::sqrt(to_complex(pair.radicand));
        out.values = {Eigenvalue::from_value(center + root), Eigenvalue::from_value(center - root)};
        out.surd = pair;
      }
      sort_canonical(out.values);
      return out;
    }
    auto charpoly = detail::characteristic_polynomial(m);
    if (auto roots = exact_roots(charpoly)) {
      for (const auto& r : *roots) out.values.push_back(Eigenvalue::from_exact(r));
      out.exact = true;
      sort_canonical(out.values);
      return out;
    }
  }

  auto m = to_matrix<Complex>(a);
  auto charpoly = detail::characteristic_polynomial(m);
  auto roots = companion_roots(charpoly);
  // Merge clusters of a multiple root into their mean.
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= kClusterTol * std::max(1.0, std::abs(roots[i])))
        members.push_back(j);
    }
    Complex mean = 0.0;
    for (auto k : members) mean += roots[k];
    mean /= static_cast<double>(members.size());
    for (auto k : members) {
      used[k] = true;
      out.values.push_back(Eigenvalue::from_value(mean));
    }
  }
  for (const auto& v : out.values) out.residual = std::max(out.residual, relative_residual(charpoly, v.value));
  if (out.residual > kResidualLimit) throw ConvergenceError("eigenvalue refinement did not converge", out.residual);
  sort_canonical(out.values);
  return out;
}

PoincareCheck poincare_check(const std::vector<Eigenvalue>& eigs) {
  PoincareCheck out;
  if (eigs.empty()) return out;
  bool all_exact = std::all_of(eigs.begin(), eigs.end(), [](const Eigenvalue& e) { return e.exact.has_value(); });
  bool contains = false;
  if (all_exact) {
    std::vector<Pt<Rational>> pts;
    for (const auto& e : eigs) pts.push_back({e.exact->re(), e.exact->im()});
    Pt<Rational> p = nearest_to_origin(convex_hull(pts), contains);
    Rational d2 = p.x * p.x + p.y * p.y;
    out.poincare = !contains && d2 > 0;
    if (out.poincare) {
      out.c_squared = d2;
      out.c = std::sqrt(to_double(d2));
      if (auto r = rational_sqrt(d2)) out.c = to_double(*r);
      out.nearest_exact = GaussianRational(p.x, p.y);
      out.nearest = to_complex(*out.nearest_exact);
    }
    return out;
  }
  std::vector<Pt<double>> pts;
  double scale = 0.0;
  for (const auto& e : eigs) {
    pts.push_back({e.value.real(), e.value.imag()});
    scale = std::max(scale, std::abs(e.value));
  }
  Pt<double> p = nearest_to_origin(convex_hull(pts), contains);
  double d = std::hypot(p.x, p.y);
  out.poincare = !contains && d > 1e-12 * scale;
  if (out.poincare) {
    out.c = d;
    out.nearest = Complex(p.x, p.y);
  }
  return out;
}

PoincareCheck poincare_check(const std::vector<Complex>& eigs) {
  std::vector<Eigenvalue> v;
  for (const auto& z : eigs) v.push_back(Eigenvalue::from_value(z));
  return poincare_check(v);
}

int compare_argument(const Eigenvalue& a, const Eigenvalue& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  if (a.exact && b.exact) {
    Rational cr = a.exact->re() * b.exact->im() - a.exact->im() * b.exact->re();
    if (cr == 0) return 0;
    return cr > 0 ? -1 : 1;
  }
  double cr = a.value.real() * b.value.imag() - a.value.imag() * b.value.real();
  if (std::abs(cr) <= kRayTol * std::abs(a.value) * std::abs(b.value)) return 0;
  return cr > 0 ? -1 : 1;
}

bool same_ray(const Eigenvalue& a, const Eigenvalue& b) {
  if (a.exact && b.exact) {
    GaussianRational p = *a.exact * b.exact->conj();
    return p.im() == 0 && p.re() > 0;
  }
  Complex p = a.value * std::conj(b.value);
  double mag = std::abs(a.value) * std::abs(b.value);
  return mag > 0 && std::abs(p.imag()) <= kRayTol * mag && p.real() > 0;
}

std::vector<int> canonical_order(const std::vector<Eigenvalue>& eigs) {
  std::vector<int> idx(eigs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    int c = compare_argument(eigs[i], eigs[j]);
    if (c != 0) return c < 0;
    if (eigs[i].exact && eigs[j].exact) return eigs[i].exact->norm() < eigs[j].exact->norm();
    return std::abs(eigs[i].value) < std::abs(eigs[j].value);
  });
  return idx;
}

std::vector<int> RayConfiguration::sizes() const {
  std::vector<int> s;
  for (const auto& p : parts) s.push_back(static_cast<int>(p.size()));
  return s;
}

RayConfiguration ray_configuration(const std::vector<Eigenvalue>& eigs) {
  if (!poincare_check(eigs).poincare) throw NotPoincareError("ray configuration needs a Poincare spectrum");
  RayConfiguration out;
  for (int k : canonical_order(eigs)) {
    if (!out.parts.empty() && compare_argument(eigs[out.parts.back().front()], eigs[k]) == 0) {
      out.parts.back().push_back(k);
      continue;
    }
    out.parts.push_back({k});
    double angle = std::arg(eigs[k].value);
    if (half_plane(eigs[k]) == 0 && angle < 0) angle = 0.0;
    if (angle < 0) angle += 2.0 * std::numbers::pi;
    if (half_plane(eigs[k]) == 1 && angle == 0.0) angle = std::numbers::pi;
    out.angles.push_back(angle);
  }
  return out;
}

bool ray_sizes_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
  if (a == b) return true;
  return std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

bool ray_config_equivalent(const RayConfiguration& a, const RayConfiguration& b) {
  return ray_sizes_equivalent(a.sizes(), b.sizes());
}

std::vector<Complex> Spectrum::values() const {
  std::vector<Complex> v;
  for (const auto& e : eigenvalues) v.push_back(e.value);
  return v;
}

std::vector<int> Spectrum::canonical_order() const { return foliage::canonical_order(eigenvalues); }

Spectrum make_spectrum(const std::vector<Eigenvalue>& eigs) {
  Spectrum s;
  s.eigenvalues = eigs;
  s.exact = std::all_of(eigs.begin(), eigs.end(), [](const Eigenvalue& e) { return e.exact.has_value(); });
  auto pc = poincare_check(eigs);
  s.poincare = pc.poincare;
  s.c = pc.c;
  s.c_squared = pc.c_squared;
  s.nearest = pc.nearest;
  s.nearest_exact = pc.nearest_exact;
  s.jordan_superdiagonal.assign(eigs.empty() ? 0 : eigs.size() - 1, 0);
  return s;
}

Spectrum make_spectrum(const std::vector<GaussianRational>& eigs) {
  std::vector<Eigenvalue> v;
  for (const auto& q : eigs) v.push_back(Eigenvalue::from_exact(q));
  return make_spectrum(v);
}

Spectrum make_spectrum(const std::vector<Complex>& eigs) {
  std::vector<Eigenvalue> v;
  for (const auto& z : eigs) v.push_back(Eigenvalue::from_value(z));
  return make_spectrum(v);
}

Spectrum spectrum(const LinearPart& a) {
  JordanForm jf = jordanize(a);
  Spectrum s = make_spectrum(jf.eigenvalues);
  s.surd = jf.surd;
  s.residual = jf.residual;
  for (int i = 0; i + 1 < a.n; ++i) s.jordan_superdiagonal[i] = jf.J.at(i, i + 1).is_zero() ? 0 : 1;
  if (s.surd) {
    // Exact Poincare test for a surd pair: sigma = l1/l2 + l2/l1 from trace and determinant.
    GaussianRational tr = s.surd->center * GaussianRational(2);
    GaussianRational det = s.surd->center * s.surd->center - s.surd->radicand;
    if (det.is_zero()) {
      s.poincare = false;
    } else {
      GaussianRational sigma = tr * tr / det - GaussianRational(2);
      s.poincare = !(sigma.is_real() && sigma.re() <= -2);
    }
    if (!s.poincare) {
      s.c = 0.0;
      s.c_squared.reset();
      s.nearest.reset();
      s.nearest_exact.reset();
    }
  }
  return s;
}

Spectrum spectrum(const GermPoly& germ) { return spectrum(linear_part(germ)); }

}  // namespace foliage
