// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "foliage/detail/linalg.hpp"
#include "foliage/detail/polynomial.hpp"
#include "foliage/errors.hpp"

namespace foliage {

namespace {

using detail::Field;
using detail::Matrix;
using detail::Poly;
using detail::PolyMap;

template <class K>
Matrix<K> to_matrix(const LinearPart& a) {
  Matrix<K> m(a.n, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) m(i, j) = Field<K>::from_scalar(a.at(i, j));
  return m;
}

template <class K>
LinearPart to_linear_part(const Matrix<K>& m) {
  LinearPart a{m.rows, {}};
  for (const auto& x : m.data) a.entries.push_back(Field<K>::to_scalar(x));
  return a;
}

bool scalars_equal(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
  return std::abs(a.value() - b.value()) <= 1e-12 * scale;
}

bool jordan_shaped(const LinearPart& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      if (i == j || a.at(i, j).is_zero()) continue;
      if (j != i + 1) return false;
      if (!scalars_equal(a.at(i, i), a.at(j, j))) return false;
    }
  return true;
}

Eigenvalue eigenvalue_of(const ComplexScalar& s) {
  return s.exact ? Eigenvalue::from_exact(*s.exact) : Eigenvalue::from_value(s.value());
}

template <class K>
K eigen_key(const Eigenvalue& e);

template <>
GaussianRational eigen_key<GaussianRational>(const Eigenvalue& e) {
  return *e.exact;
}

template <>
Complex eigen_key<Complex>(const Eigenvalue& e) {
  return e.value;
}

// Distinct eigenvalues with multiplicities, in the given order.
template <class K>
std::vector<std::pair<K, int>> group_eigenvalues(const std::vector<Eigenvalue>& values) {
  std::vector<std::pair<K, int>> out;
  for (const auto& e : values) {
    K key = eigen_key<K>(e);
    bool found = false;
    for (auto& [k, mult] : out) {
      bool equal = Field<K>::exact ? Field<K>::is_zero(k - key)
                                   : std::abs(Field<K>::to_complex(k - key)) <=
                                         1e-9 * std::max(1.0, Field<K>::magnitude(key));
      if (equal) {
        ++mult;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({key, 1});
  }
  return out;
}

template <class K>
bool build_jordan(const LinearPart& a, const std::vector<Eigenvalue>& values, JordanForm& out) {
  const int n = a.n;
  Matrix<K> am = to_matrix<K>(a);
  auto groups = group_eigenvalues<K>(values);
  const double scale = std::max(1.0, detail::max_norm(am));
  const std::vector<double> tolerances = Field<K>::exact ? std::vector<double>{0.0}
                                                         : std::vector<double>{1e-9, 1e-7, 1e-5};
  for (double tol : tolerances) {
    Matrix<K> p;
    std::vector<detail::JordanBlock<K>> blocks;
    if (!detail::jordan_basis(am, groups, tol, p, blocks)) continue;
    if constexpr (!Field<K>::exact) {
      // Normalize each chain by the length of its eigenvector.
      int col = 0;
      for (const auto& b : blocks) {
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(p(i, col));
        norm = std::sqrt(norm);
        for (int j = col; j < col + b.size; ++j)
          for (int i = 0; i < n; ++i) p(i, j) /= norm;
        col += b.size;
      }
    }
    auto pinv = detail::inverse(p, Field<K>::exact ? 0.0 : 1e-13);
    if (!pinv) continue;
    Matrix<K> j(n, n);
    std::vector<Eigenvalue> diag;
    int col = 0;
    for (const auto& b : blocks) {
      for (int s = 0; s < b.size; ++s) {
        j(col + s, col + s) = b.eigenvalue;
        if (s + 1 < b.size) j(col + s, col + s + 1) = Field<K>::one();
        if constexpr (Field<K>::exact) {
          diag.push_back(Eigenvalue::from_exact(b.eigenvalue));
        } else {
          diag.push_back(Eigenvalue::from_value(b.eigenvalue));
        }
      }
      col += b.size;
    }
    Matrix<K> check = (*pinv) * am * p;
    double residual = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) residual = std::max(residual, Field<K>::magnitude(check(r, c) - j(r, c)));
    if (Field<K>::exact && residual != 0.0) throw std::logic_error("exact Jordan basis failed verification");
    if (!Field<K>::exact && residual > 1e-6 * scale) continue;
    out.J = to_linear_part(j);
    out.P = to_linear_part(p);
    out.P_inverse = to_linear_part(*pinv);
    out.eigenvalues = std::move(diag);
    out.exact = Field<K>::exact;
    out.condition = detail::max_norm(p) * detail::max_norm(*pinv) * n;
    out.residual = residual;
    return true;
  }
  return false;
}

LinearPart identity_part(int n) {
  LinearPart id{n, std::vector<ComplexScalar>(static_cast<std::size_t>(n) * n, ComplexScalar::from_exact(0))};
  for (int i = 0; i < n; ++i) id.at(i, i) = ComplexScalar::from_exact(1);
  return id;
}

template <class K>
PolyMap<K> to_poly_map(const GermPoly& germ) {
  PolyMap<K> out(germ.dimension());
  for (const auto& t : germ.terms()) detail::add_term(out[t.component], t.exponents, Field<K>::from_scalar(t.coeff));
  return out;
}

template <class K>
GermPoly to_germ(const PolyMap<K>& map) {
  std::vector<MonomialTerm> terms;
  for (std::size_t i = 0; i < map.size(); ++i)
    for (const auto& [m, c] : map[i]) terms.push_back({static_cast<int>(i), m, Field<K>::to_scalar(c)});
  return GermPoly(static_cast<int>(map.size()), std::move(terms));
}

template <class K>
PolyMap<K> apply_matrix(const Matrix<K>& a, const PolyMap<K>& p) {
  const int n = a.rows;
  PolyMap<K> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (Field<K>::is_zero(a(i, j))) continue;
      detail::add_into(out[i], p[j], a(i, j));
    }
  return out;
}

// Field in coordinates z = P w: P^{-1} F(P w).
template <class K>
PolyMap<K> conjugate(const PolyMap<K>& f, const Matrix<K>& p, const Matrix<K>& pinv, int max_degree) {
  return apply_matrix(pinv, detail::compose(f, detail::linear_map(p), max_degree));
}

// Degree-by-degree elimination of non-resonant terms.
template <class K>
class Reducer {
 public:
  Reducer(std::vector<K> lambda, std::vector<K> super, const NormalFormOptions& opt)
      : lambda_(std::move(lambda)), super_(std::move(super)), opt_(opt), n_(static_cast<int>(lambda_.size())) {}

  K divisor(int i, const MultiIndex& m) const {
    K d = -lambda_[i];
    for (int j = 0; j < n_; ++j)
      if (m[j] != 0) d += Field<K>::from_int(m[j]) * lambda_[j];
    return d;
  }

  bool resonant(int i, const MultiIndex& m) const {
    K d = divisor(i, m);
    if constexpr (Field<K>::exact) {
      return d.is_zero();
    } else {
      return std::abs(d) <= opt_.resonance_tol * (1.0 + std::abs(lambda_[i]));
    }
  }

  // L_S h = Dh.(S w) - S h for the nilpotent part S.
  PolyMap<K> nilpotent_action(const PolyMap<K>& h, int max_degree) const {
    PolyMap<K> sw(n_);
    bool any = false;
    for (int i = 0; i + 1 < n_; ++i) {
      if (Field<K>::is_zero(super_[i])) continue;
      any = true;
      MultiIndex m(n_, 0);
      m[i + 1] = 1;
      sw[i][m] = super_[i];
    }
    PolyMap<K> out(n_);
    if (!any) return out;
    out = detail::jacobian_apply(h, sw, max_degree);
    for (int i = 0; i + 1 < n_; ++i) {
      if (Field<K>::is_zero(super_[i])) continue;
      detail::add_into(out[i], h[i + 1], -super_[i]);
    }
    return out;
  }

  // Solves (L_D + L_S) h = f for f supported on non-resonant monomials.
  PolyMap<K> solve(const PolyMap<K>& f, int degree) {
    PolyMap<K> h(n_);
    const int max_iter = degree * n_ + 4;
    for (int iter = 0; iter < max_iter; ++iter) {
      PolyMap<K> ls = nilpotent_action(h, degree);
      PolyMap<K> next(n_);
      for (int i = 0; i < n_; ++i) {
        Poly<K> rhs = f[i];
        detail::add_into(rhs, ls[i], -Field<K>::one());
        for (const auto& [m, c] : rhs) {
          if (resonant(i, m)) continue;
          K d = divisor(i, m);
          double mag = Field<K>::magnitude(d);
          if (!Field<K>::exact && mag < opt_.near_resonance)
            throw NearResonanceError("non-resonant divisor below safety margin", mag);
          min_divisor_ = std::min(min_divisor_, mag);
          detail::add_term(next[i], m, c / d);
        }
      }
      if (same(next, h)) return next;
      h = std::move(next);
    }
    return h;
  }

  double min_divisor() const { return min_divisor_; }

 private:
  static bool same(const PolyMap<K>& a, const PolyMap<K>& b) {
    if constexpr (Field<K>::exact) {
      return a == b;
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (const auto& [m, c] : a[i]) {
          auto it = b[i].find(m);
          if (it == b[i].end() || std::abs(it->second - c) > 1e-15 * std::max(1.0, std::abs(c))) return false;
        }
      }
      return true;
    }
  }

  std::vector<K> lambda_;
  std::vector<K> super_;
  NormalFormOptions opt_;
  int n_;
  double min_divisor_ = INFINITY;
};

template <class K>
NormalFormResult reduce(const GermPoly& germ, const JordanForm& jf, int degree, const NormalFormOptions& opt) {
  const int n = germ.dimension();
  const int big_n = degree;
  Matrix<K> p = to_matrix<K>(jf.P), pinv = to_matrix<K>(jf.P_inverse);
  std::vector<K> lambda, super(n > 0 ? n - 1 : 0, Field<K>::zero());
  for (const auto& e : jf.eigenvalues) lambda.push_back(eigen_key<K>(e));
  for (int i = 0; i + 1 < n; ++i) super[i] = Field<K>::from_scalar(jf.J.at(i, i + 1));

  PolyMap<K> f = detail::truncate_map(to_poly_map<K>(germ), big_n);
  if (!jf.unchanged) f = conjugate(f, p, pinv, big_n);
  // The linear part is J by construction; drop rounding noise.
  for (int i = 0; i < n; ++i) {
    for (auto it = f[i].begin(); it != f[i].end();) {
      it = detail::total_degree(it->first) == 1 ? f[i].erase(it) : std::next(it);
    }
    for (int j = 0; j < n; ++j) {
      K v = Field<K>::from_scalar(jf.J.at(i, j));
      if (Field<K>::is_zero(v)) continue;
      MultiIndex m(n, 0);
      m[j] = 1;
      f[i][m] = v;
    }
  }

  Reducer<K> reducer(lambda, super, opt);
  PolyMap<K> phi = detail::linear_map(p);

  for (int k = 2; k <= big_n; ++k) {
    PolyMap<K> fk(n), nonres(n);
    for (int i = 0; i < n; ++i) {
      for (const auto& [m, c] : detail::homogeneous_part(f[i], k)) {
        if (!reducer.resonant(i, m)) nonres[i][m] = c;
      }
    }
    bool empty = std::all_of(nonres.begin(), nonres.end(), [](const Poly<K>& q) { return q.empty(); });
    if (empty) continue;
    PolyMap<K> h = reducer.solve(nonres, k);

    PolyMap<K> x = detail::identity_map<K>(n);
    for (int i = 0; i < n; ++i) detail::add_into(x[i], h[i], Field<K>::one());
    PolyMap<K> sub = detail::compose(f, x, big_n);
    // (I + Dh) g = sub, solved by fixed-point iteration.
    PolyMap<K> g = sub;
    const int sweeps = (big_n - 1) / (k - 1) + 1;
    for (int s = 0; s < sweeps; ++s) {
      PolyMap<K> dh = detail::jacobian_apply(h, g, big_n);
      g = detail::add_maps(sub, dh, -Field<K>::one());
    }
    // Degree-k part of g is now resonant; remove numeric residue.
    for (int i = 0; i < n; ++i) {
      for (auto it = g[i].begin(); it != g[i].end();) {
        bool drop = detail::total_degree(it->first) == k && !reducer.resonant(i, it->first);
        if (drop && Field<K>::exact) throw std::logic_error("homological equation left a non-resonant term");
        it = drop ? g[i].erase(it) : std::next(it);
      }
    }
    f = std::move(g);
    phi = detail::compose(phi, x, big_n);
  }

  // Inverse change: phi = P (w + q(w)), so w = P^{-1} z - q(w).
  PolyMap<K> q = apply_matrix(pinv, phi);
  for (int i = 0; i < n; ++i) {
    for (auto it = q[i].begin(); it != q[i].end();) {
      it = detail::total_degree(it->first) == 1 ? q[i].erase(it) : std::next(it);
    }
  }
  PolyMap<K> lin_inv = detail::linear_map(pinv);
  PolyMap<K> psi = lin_inv;
  for (int s = 1; s < big_n; ++s) {
    psi = detail::add_maps(lin_inv, detail::compose(q, psi, big_n), -Field<K>::one());
  }

  NormalFormResult out{to_germ(f), CoordChange{big_n, to_germ(phi), to_germ(psi)}, {}, {}, Field<K>::exact,
                       big_n, reducer.min_divisor()};
  for (int i = 0; i < n; ++i)
    for (const auto& [m, c] : f[i])
      if (detail::total_degree(m) >= 2) out.resonant_support.push_back({i, m});
  out.spectrum = make_spectrum(jf.eigenvalues);
  for (int i = 0; i + 1 < n; ++i) out.spectrum.jordan_superdiagonal[i] = jf.J.at(i, i + 1).is_zero() ? 0 : 1;
  out.spectrum.surd = jf.surd;
  return out;
}

ComplexScalar reciprocal(const ComplexScalar& s) {
  if (s.exact) return ComplexScalar::from_exact(GaussianRational(1) / *s.exact);
  return ComplexScalar::from_value(1.0 / s.value());
}

ComplexScalar power(const ComplexScalar& s, int e) {
  ComplexScalar r = ComplexScalar::from_exact(1);
  for (int k = 0; k < e; ++k) r = r * s;
  return r;
}

// Exact ratio data of a 2x2 linear part: sigma = tr^2/det - 2 = rho + 1/rho.
struct RatioData {
  bool exact = false;
  bool real_positive = false;
  Complex rho{0.0, 0.0};              // representative, |rho| >= 1 when real
  std::optional<Rational> rational;   // when rho is rational
  std::optional<RationalityTest> test;
  bool swapped = false;
};

GermPoly linear_2d(const ComplexScalar& lambda) {
  std::vector<MonomialTerm> t{{0, {1, 0}, lambda}, {1, {0, 1}, ComplexScalar::from_exact(1)}};
  return GermPoly(2, std::move(t));
}

}  // namespace

JordanForm jordanize(const LinearPart& a) {
  const int n = a.n;
  JordanForm out;
  if (jordan_shaped(a)) {
    out.J = a;
    out.P = identity_part(n);
    out.P_inverse = identity_part(n);
    for (int i = 0; i < n; ++i) out.eigenvalues.push_back(eigenvalue_of(a.at(i, i)));
    out.exact = a.is_exact();
    out.unchanged = true;
    return out;
  }
  EigenSolution eig = eigenvalues(a);
  out.surd = eig.surd;
  std::vector<Eigenvalue> ordered;
  for (int k : canonical_order(eig.values)) ordered.push_back(eig.values[k]);
  if (eig.exact && a.is_exact()) {
    if (!build_jordan<GaussianRational>(a, ordered, out)) throw std::logic_error("exact Jordan structure not found");
    return out;
  }
  if (!build_jordan<Complex>(a, ordered, out))
    throw ConvergenceError("ill-conditioned numeric Jordan structure", out.residual);
  return out;
}

int default_degree(const Spectrum& s) {
  if (!s.poincare) throw NotPoincareError("germ is not of Poincare type");
  if (s.exact && s.c_squared) {
    Rational ratio = 0;
    for (const auto& e : s.eigenvalues) ratio = std::max(ratio, Rational(e.exact->norm() / *s.c_squared));
    int k = 1;
    while (Rational(k) * k < ratio) ++k;
    return std::max(k, 2);
  }
  double m = 0.0;
  for (const auto& e : s.eigenvalues) m = std::max(m, std::abs(e.value));
  return std::max(static_cast<int>(std::ceil(m / s.c - 1e-12)), 2);
}

NormalFormResult poincare_dulac(const GermPoly& germ, const NormalFormOptions& options) {
  LinearPart a = linear_part(germ);
  JordanForm jf = jordanize(a);
  Spectrum s = make_spectrum(jf.eigenvalues);
  if (jf.surd) {
    GaussianRational tr = jf.surd->center * GaussianRational(2);
    GaussianRational det = jf.surd->center * jf.surd->center - jf.surd->radicand;
    GaussianRational sigma = det.is_zero() ? GaussianRational(-2) : tr * tr / det - GaussianRational(2);
    s.poincare = !det.is_zero() && !(sigma.is_real() && sigma.re() <= -2);
  }
  if (!s.poincare) throw NotPoincareError("germ is not of Poincare type");
  int degree = options.degree > 0 ? options.degree : default_degree(s);
  if (degree < 2) throw PreconditionError("degree bound must be at least 2");
  if (jf.exact && germ.is_exact()) return reduce<GaussianRational>(germ, jf, degree, options);
  return reduce<Complex>(germ, jf, degree, options);
}

SuperdiagonalScaling normalize_superdiagonal_with_factors(const GermPoly& germ) {
  const int n = germ.dimension();
  LinearPart a = linear_part(germ);
  if (!jordan_shaped(a)) throw PreconditionError("linear part is not in Jordan form");
  std::vector<Eigenvalue> diag;
  for (int i = 0; i < n; ++i) diag.push_back(eigenvalue_of(a.at(i, i)));
  PoincareCheck pc = poincare_check(diag);
  if (!pc.poincare) throw NotPoincareError("germ is not of Poincare type");

  ComplexScalar target;
  std::optional<Rational> c_exact;
  if (pc.c_squared) c_exact = rational_sqrt(*pc.c_squared);
  if (c_exact) {
    target = ComplexScalar::from_exact(GaussianRational(*c_exact / (2 * n)));
  } else {
    target = ComplexScalar::from_value(Complex(pc.c / (2.0 * n), 0.0));
  }

  std::vector<ComplexScalar> eps(n, ComplexScalar::from_exact(1));
  for (int i = 0; i + 1 < n; ++i) {
    const auto& s = a.at(i, i + 1);
    if (s.is_zero()) continue;
    eps[i + 1] = eps[i] * target * reciprocal(s);
  }
  std::vector<ComplexScalar> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = reciprocal(eps[i]);

  std::vector<MonomialTerm> terms;
  for (const auto& t : germ.terms()) {
    ComplexScalar c = t.coeff * inv[t.component];
    for (int j = 0; j < n; ++j) c = c * power(eps[j], t.exponents[j]);
    terms.push_back({t.component, t.exponents, c});
  }
  return {GermPoly(n, std::move(terms)), eps, target};
}

GermPoly normalize_superdiagonal(const GermPoly& germ) { return normalize_superdiagonal_with_factors(germ).germ; }

GermPoly conjugate_linear(const GermPoly& germ, const LinearPart& p, const LinearPart& p_inverse) {
  const int d = germ.degree();
  if (germ.is_exact() && p.is_exact() && p_inverse.is_exact()) {
    return to_germ(conjugate(to_poly_map<GaussianRational>(germ), to_matrix<GaussianRational>(p),
                             to_matrix<GaussianRational>(p_inverse), d));
  }
  return to_germ(conjugate(to_poly_map<Complex>(germ), to_matrix<Complex>(p), to_matrix<Complex>(p_inverse), d));
}

Canonical2D canonical_form_2d(const GermPoly& germ) {
  if (germ.dimension() != 2) throw PreconditionError("canonical form needs n = 2");
  LinearPart a = linear_part(germ);
  JordanForm jf = jordanize(a);
  Canonical2D out;

  if (!jf.J.at(0, 1).is_zero()) {
    Spectrum s = make_spectrum(jf.eigenvalues);
    if (!s.poincare) throw NotPoincareError("germ is not of Poincare type");
    out.type = 4;
    out.m = 1;
    out.lambda = 1.0;
    out.lambda_exact = Rational(1);
    out.ratio_exact = jf.exact;
    std::vector<MonomialTerm> t{{0, {1, 0}, ComplexScalar::from_exact(1)},
                                {0, {0, 1}, ComplexScalar::from_exact(GaussianRational(Rational(1, 4)))},
                                {1, {0, 1}, ComplexScalar::from_exact(1)}};
    out.residual = GermPoly(2, std::move(t));
    return out;
  }

  RatioData ratio;
  const Complex l1 = jf.eigenvalues[0].value, l2 = jf.eigenvalues[1].value;
  if (a.is_exact()) {
    ratio.exact = true;
    GaussianRational a00 = *a.at(0, 0).exact, a01 = *a.at(0, 1).exact, a10 = *a.at(1, 0).exact,
                     a11 = *a.at(1, 1).exact;
    GaussianRational tr = a00 + a11, det = a00 * a11 - a01 * a10;
    if (det.is_zero()) throw NotPoincareError("germ is not of Poincare type");
    GaussianRational sigma = tr * tr / det - GaussianRational(2);
    if (sigma.is_real() && sigma.re() <= -2) throw NotPoincareError("germ is not of Poincare type");
    if (sigma.is_real() && sigma.re() >= 2) {
      ratio.real_positive = true;
      Rational disc = sigma.re() * sigma.re() - 4;
      if (auto r = rational_sqrt(disc)) {
        ratio.rational = (sigma.re() + *r) / 2;
        ratio.rho = to_double(*ratio.rational);
      } else {
        ratio.rho = (to_double(sigma.re()) + std::sqrt(to_double(disc))) / 2.0;
      }
      ratio.swapped = std::abs(l1) < std::abs(l2);
    } else {
      ratio.rho = l1 / l2;
      if (jf.eigenvalues[0].exact && jf.eigenvalues[1].exact) {
        GaussianRational q = *jf.eigenvalues[0].exact / *jf.eigenvalues[1].exact;
        ratio.rho = to_complex(q);
      }
    }
  } else {
    if (!poincare_check(jf.eigenvalues).poincare) throw NotPoincareError("germ is not of Poincare type");
    Complex rho = l1 / l2;
    if (std::abs(rho.imag()) <= 1e-9 * std::abs(rho) && rho.real() > 0) {
      ratio.real_positive = true;
      ratio.swapped = rho.real() < 1.0;
      double r = ratio.swapped ? 1.0 / rho.real() : rho.real();
      ratio.rho = r;
      ratio.test = recognize_rational(r);
      if (ratio.test->outcome == RationalityTest::Outcome::Rational)
        ratio.rational = Rational(ratio.test->witness.p, ratio.test->witness.q);
    } else {
      ratio.rho = rho;
    }
  }

  out.ratio_exact = ratio.exact;
  out.swapped = ratio.swapped;
  out.lambda = ratio.rho;
  out.lambda_exact = ratio.rational;
  if (ratio.test) out.rationality = ratio.test;

  if (!ratio.real_positive) {
    out.type = 1;
    if (jf.eigenvalues[0].exact && jf.eigenvalues[1].exact) {
      out.residual = linear_2d(ComplexScalar::from_exact(*jf.eigenvalues[0].exact / *jf.eigenvalues[1].exact));
    } else {
      out.residual = linear_2d(ComplexScalar::from_value(ratio.rho));
    }
    return out;
  }

  ComplexScalar lambda_scalar = ratio.rational ? ComplexScalar::from_exact(GaussianRational(*ratio.rational))
                                               : ComplexScalar::from_value(ratio.rho);
  out.type = 2;
  out.residual = linear_2d(lambda_scalar);
  if (!ratio.rational || denominator(*ratio.rational) != 1 || *ratio.rational < 2) return out;

  // Integer ratio m >= 2: the only candidate resonant monomial is y^m in
  // the x-component, where x carries the larger eigenvalue.
  const int m = static_cast<int>(numerator(*ratio.rational).convert_to<long long>());
  NormalFormResult nf = poincare_dulac(germ);
  const int big = std::abs(nf.spectrum.eigenvalues[0].value) >= std::abs(nf.spectrum.eigenvalues[1].value) ? 0 : 1;
  const int small = 1 - big;
  MultiIndex mono(2, 0);
  mono[small] = m;
  const MonomialTerm* term = nf.normal.find(big, mono);
  const auto& lam_small = nf.normal.find(small, [&] {
    MultiIndex e(2, 0);
    e[small] = 1;
    return e;
  }())->coeff;
  if (term == nullptr) return out;
  ComplexScalar coeff = term->coeff * reciprocal(lam_small);
  out.resonant_coefficient_abs = std::abs(coeff.value());
  bool nonzero = coeff.exact ? !coeff.exact->is_zero() : out.resonant_coefficient_abs > 1e-10;
  if (!nonzero) return out;
  out.type = 3;
  out.m = m;
  out.original_coefficient = coeff;
  std::vector<MonomialTerm> t{{0, {1, 0}, ComplexScalar::from_exact(m)},
                              {0, {0, m}, ComplexScalar::from_exact(1)},
                              {1, {0, 1}, ComplexScalar::from_exact(1)}};
  out.residual = GermPoly(2, std::move(t));
  return out;
}

}  // namespace foliage
