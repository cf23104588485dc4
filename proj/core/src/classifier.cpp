// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

std::string describe(const RationalityTest& t) {
  std::ostringstream os;
  os.precision(17);
  os << "continued fraction: convergent " << t.witness.p << "/" << t.witness.q << " error " << t.witness.error
     << " (cap " << t.max_denominator << ", tolerance " << t.tolerance << "/q^2)";
  return os.str();
}

bool scalar_close(const Eigenvalue& a, const Eigenvalue& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return std::abs(a.value - b.value) <= kIrrationalMatchTol * std::max(1.0, std::abs(a.value));
}

// Diagonal linear field with no other terms.
std::optional<std::vector<Eigenvalue>> diagonal_linear(const GermPoly& g) {
  std::vector<Eigenvalue> out(g.dimension());
  std::vector<bool> seen(g.dimension(), false);
  for (const auto& t : g.terms()) {
    if (t.degree() != 1 || t.exponents[t.component] != 1) return std::nullopt;
    out[t.component] = t.coeff.exact ? Eigenvalue::from_exact(*t.coeff.exact) : Eigenvalue::from_value(t.coeff.value());
    seen[t.component] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return std::nullopt;
  return out;
}

// Equal up to permutation and a common complex factor.
bool proportional_multisets(std::vector<Eigenvalue> a, std::vector<Eigenvalue> b) {
  if (a.size() != b.size()) return false;
  auto by_modulus = [](const Eigenvalue& x, const Eigenvalue& y) {
    if (x.exact && y.exact) return x.exact->norm() < y.exact->norm();
    return std::abs(x.value) < std::abs(y.value);
  };
  std::sort(a.begin(), a.end(), by_modulus);
  std::sort(b.begin(), b.end(), by_modulus);
  bool exact = std::all_of(a.begin(), a.end(), [](const Eigenvalue& e) { return e.exact.has_value(); }) &&
               std::all_of(b.begin(), b.end(), [](const Eigenvalue& e) { return e.exact.has_value(); });
  if (exact) {
    GaussianRational alpha = *b[0].exact / *a[0].exact;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(*b[k].exact == alpha * *a[k].exact)) return false;
    return true;
  }
  Complex alpha = b[0].value / a[0].value;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!scalar_close(Eigenvalue::from_value(alpha * a[k].value), b[k])) return false;
  return true;
}

struct PartCheck {
  Verdict result;
  std::string reason;
};

PartCheck compare_parts(const GermPoly& n1, const std::vector<int>& p1, const GermPoly& n2,
                        const std::vector<int>& p2) {
  const std::size_t size = p1.size();
  std::ostringstream os;
  os << "part of size " << size << ": ";
  if (size == 1) return {Verdict::Equivalent, os.str() + "one-dimensional restrictions are equivalent"};
  GermPoly r1 = restrict_to(n1, p1), r2 = restrict_to(n2, p2);
  if (size == 2) {
    Classification2D c1 = classify_2d(r1), c2 = classify_2d(r2);
    if (!c1.decided() || !c2.decided()) return {Verdict::Unknown, os.str() + "ratio rationality undecidable"};
    bool eq = c1.value() == c2.value();
    os << c1.value().to_string() << (eq ? " == " : " != ") << c2.value().to_string();
    return {eq ? Verdict::Equivalent : Verdict::NotEquivalent, os.str()};
  }
  auto d1 = diagonal_linear(r1), d2 = diagonal_linear(r2);
  if (!d1 || !d2) return {Verdict::Unknown, os.str() + "restriction is not diagonal-linear; no decision procedure"};
  bool eq = proportional_multisets(*d1, *d2);
  os << (eq ? "diagonal spectra proportional" : "diagonal spectra not proportional");
  return {eq ? Verdict::Equivalent : Verdict::NotEquivalent, os.str()};
}

}  // namespace

EquivClass2D EquivClass2D::rational(long long p, long long q) {
  long long g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (p < q) std::swap(p, q);
  EquivClass2D c;
  c.tag = Tag::Rational;
  c.p = p;
  c.q = q;
  return c;
}

EquivClass2D EquivClass2D::irrational(double lambda, bool exact) {
  EquivClass2D c;
  c.tag = Tag::Irrational;
  c.lambda = lambda < 1.0 ? 1.0 / lambda : lambda;
  c.exact = exact;
  return c;
}

EquivClass2D EquivClass2D::resonant(int m) {
  EquivClass2D c;
  c.tag = Tag::Resonant;
  c.m = m;
  return c;
}

std::string EquivClass2D::name() const {
  switch (tag) {
    case Tag::Generic: return "Generic";
    case Tag::Rational: return "Rational";
    case Tag::Irrational: return "Irrational";
    case Tag::Resonant: return "Resonant";
  }
  return "";
}

std::string EquivClass2D::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << name();
  if (tag == Tag::Rational) os << "(" << p << "," << q << ")";
  if (tag == Tag::Irrational) os << "(" << lambda << ")";
  if (tag == Tag::Resonant) os << "(" << m << ")";
  return os.str();
}

bool operator==(const EquivClass2D& a, const EquivClass2D& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case EquivClass2D::Tag::Generic: return true;
    case EquivClass2D::Tag::Rational: return a.p == b.p && a.q == b.q;
    case EquivClass2D::Tag::Irrational:
      return std::abs(a.lambda - b.lambda) <= kIrrationalMatchTol * a.lambda;
    case EquivClass2D::Tag::Resonant: return a.m == b.m;
  }
  return false;
}

const EquivClass2D& Classification2D::value() const {
  if (!cls) {
    std::string msg = "rationality of the eigenvalue ratio is undecidable";
    if (rationality) msg += ": " + describe(*rationality);
    throw UndecidableError(msg);
  }
  return *cls;
}

Classification2D classify_2d(const GermPoly& germ) {
  Classification2D out{std::nullopt, canonical_form_2d(germ), {}, std::nullopt};
  const Canonical2D& cf = out.canonical;
  out.rationality = cf.rationality;
  std::ostringstream os;
  os.precision(17);
  os << "canonical type " << cf.type << ", ratio " << cf.lambda.real();
  if (cf.lambda.imag() != 0.0) os << (cf.lambda.imag() < 0 ? "" : "+") << cf.lambda.imag() << "i";
  os << (cf.ratio_exact ? " (exact)" : " (numeric)");
  out.certificate.push_back(os.str());
  if (cf.rationality) out.certificate.push_back(describe(*cf.rationality));

  switch (cf.type) {
    case 1:
      out.cls = EquivClass2D::generic();
      out.certificate.push_back("non-real eigenvalue ratio");
      break;
    case 4:
      out.cls = EquivClass2D::resonant(1);
      out.certificate.push_back("non-diagonalizable linear part with equal eigenvalues");
      break;
    case 3: {
      out.cls = EquivClass2D::resonant(cf.m);
      std::ostringstream c;
      c.precision(17);
      c << "resonant coefficient |a| = " << cf.resonant_coefficient_abs << " nonzero";
      out.certificate.push_back(c.str());
      break;
    }
    default:
      if (cf.lambda_exact) {
        auto num = numerator(*cf.lambda_exact).convert_to<long long>();
        auto den = denominator(*cf.lambda_exact).convert_to<long long>();
        out.cls = EquivClass2D::rational(num, den);
        if (den == 1 && num >= 2) out.certificate.push_back("resonant coefficient vanishes in the normal form");
      } else if (cf.ratio_exact) {
        out.cls = EquivClass2D::irrational(cf.lambda.real(), true);
        out.certificate.push_back("ratio is a quadratic irrational");
      } else if (cf.rationality && cf.rationality->outcome == RationalityTest::Outcome::Irrational) {
        out.cls = EquivClass2D::irrational(cf.lambda.real(), false);
      }
      break;
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Unknown: return "Unknown";
  }
  return "";
}

Equivalence2D equivalent_2d(const GermPoly& g1, const GermPoly& g2) {
  Equivalence2D out;
  out.first = classify_2d(g1);
  out.second = classify_2d(g2);
  if (!out.first.decided() || !out.second.decided()) {
    out.result = Verdict::Unknown;
    out.certificate = "undecidable class";
    return out;
  }
  bool eq = out.first.value() == out.second.value();
  out.result = eq ? Verdict::Equivalent : Verdict::NotEquivalent;
  out.certificate = out.first.value().to_string() + (eq ? " == " : " != ") + out.second.value().to_string();
  return out;
}

bool pairwise_R_independent(const std::vector<Eigenvalue>& eigs) {
  RayConfiguration rc = ray_configuration(eigs);
  return std::all_of(rc.parts.begin(), rc.parts.end(), [](const std::vector<int>& p) { return p.size() == 1; });
}

GermPoly restrict_to(const GermPoly& germ, const std::vector<int>& coords) {
  const int n = germ.dimension();
  std::vector<int> slot(n, -1);
  for (std::size_t k = 0; k < coords.size(); ++k) slot[coords[k]] = static_cast<int>(k);
  std::vector<MonomialTerm> terms;
  for (const auto& t : germ.terms()) {
    if (slot[t.component] < 0) continue;
    bool inside = true;
    for (int j = 0; j < n; ++j)
      if (t.exponents[j] != 0 && slot[j] < 0) inside = false;
    if (!inside) continue;
    MonomialTerm u;
    u.component = slot[t.component];
    u.exponents.assign(coords.size(), 0);
    for (int j = 0; j < n; ++j)
      if (slot[j] >= 0) u.exponents[slot[j]] = t.exponents[j];
    u.coeff = t.coeff;
    terms.push_back(std::move(u));
  }
  return GermPoly(static_cast<int>(coords.size()), std::move(terms));
}

NdVerdict conjectured_equivalent_nd(const GermPoly& g1, const GermPoly& g2) {
  NdVerdict out;
  if (g1.dimension() != g2.dimension()) {
    out.result = Verdict::NotEquivalent;
    out.reasons.push_back("dimensions differ");
    return out;
  }
  Spectrum s1 = spectrum(g1), s2 = spectrum(g2);
  if (!s1.poincare || !s2.poincare) throw NotPoincareError("both germs must be of Poincare type");
  RayConfiguration r1 = ray_configuration(s1.eigenvalues), r2 = ray_configuration(s2.eigenvalues);
  auto fmt = [](const std::vector<int>& s) {
    std::string o = "[";
    for (std::size_t k = 0; k < s.size(); ++k) o += (k ? "," : "") + std::to_string(s[k]);
    return o + "]";
  };
  const auto z1 = r1.sizes(), z2 = r2.sizes();
  out.reasons.push_back("ray sizes " + fmt(z1) + " vs " + fmt(z2));
  if (!ray_config_equivalent(r1, r2)) {
    out.result = Verdict::NotEquivalent;
    out.reasons.push_back("ray configurations are not equivalent");
    return out;
  }
  if (std::all_of(z1.begin(), z1.end(), [](int s) { return s == 1; })) {
    out.result = Verdict::Equivalent;
    out.reasons.push_back("eigenvalues pairwise R-linearly independent");
    return out;
  }

  NormalFormResult nf1 = poincare_dulac(g1), nf2 = poincare_dulac(g2);
  RayConfiguration q1 = ray_configuration(nf1.spectrum.eigenvalues);
  RayConfiguration q2 = ray_configuration(nf2.spectrum.eigenvalues);

  std::vector<bool> orders;
  if (q1.sizes() == q2.sizes()) orders.push_back(false);
  auto rev = q2.sizes();
  std::reverse(rev.begin(), rev.end());
  if (q1.sizes() == rev && rev != q2.sizes()) orders.push_back(true);
  if (q1.sizes() == rev && rev == q2.sizes() && q2.parts.size() > 1) orders.push_back(true);

  bool any_unknown = false;
  for (bool reversed : orders) {
    bool all_equivalent = true;
    std::vector<std::string> notes;
    const std::size_t parts = q1.parts.size();
    for (std::size_t k = 0; k < parts; ++k) {
      const auto& other = q2.parts[reversed ? parts - 1 - k : k];
      PartCheck pc = compare_parts(nf1.normal, q1.parts[k], nf2.normal, other);
      notes.push_back((reversed ? "reversed: " : "direct: ") + pc.reason);
      if (pc.result == Verdict::Unknown) any_unknown = true;
      if (pc.result != Verdict::Equivalent) all_equivalent = false;
    }
    out.reasons.insert(out.reasons.end(), notes.begin(), notes.end());
    if (all_equivalent) {
      out.result = Verdict::Equivalent;
      return out;
    }
  }
  out.result = any_unknown ? Verdict::Unknown : Verdict::NotEquivalent;
  return out;
}

}  // namespace foliage
