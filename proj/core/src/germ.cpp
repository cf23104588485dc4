// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/germ.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "foliage/errors.hpp"

namespace foliage {

using ordered_json = nlohmann::ordered_json;

ComplexScalar ComplexScalar::from_exact(const GaussianRational& q) {
  ComplexScalar s;
  s.re = to_double(q.re());
  s.im = to_double(q.im());
  s.exact = q;
  return s;
}

ComplexScalar ComplexScalar::from_value(Complex z) {
  ComplexScalar s;
  s.re = z.real();
  s.im = z.imag();
  return s;
}

ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact && b.exact) return ComplexScalar::from_exact(*a.exact + *b.exact);
  return ComplexScalar::from_value(a.value() + b.value());
}

ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact && b.exact) return ComplexScalar::from_exact(*a.exact * *b.exact);
  return ComplexScalar::from_value(a.value() * b.value());
}

bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.exact.has_value() != b.exact.has_value()) return false;
  if (a.exact) return *a.exact == *b.exact;
  return a.re == b.re && a.im == b.im;
}

int MonomialTerm::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool term_key_less(const MonomialTerm& a, const MonomialTerm& b) {
  if (a.component != b.component) return a.component < b.component;
  return a.exponents < b.exponents;
}

GermPoly::GermPoly(int n, std::vector<MonomialTerm> terms) : n_(n) {
  if (n < 2) throw InvalidGermError("germ dimension must be at least 2");
  std::vector<MonomialTerm> kept;
  kept.reserve(terms.size());
  for (auto& t : terms) {
    if (t.component < 0 || t.component >= n) throw InvalidGermError("term component out of range");
    if (static_cast<int>(t.exponents.size()) != n)
      throw InvalidGermError("exponent length does not match dimension");
    for (int e : t.exponents)
      if (e < 0) throw InvalidGermError("negative exponent");
    if (!t.coeff.is_zero()) kept.push_back(std::move(t));
  }
  std::sort(kept.begin(), kept.end(), term_key_less);
  for (std::size_t i = 1; i < kept.size(); ++i) {
    if (!term_key_less(kept[i - 1], kept[i])) throw InvalidGermError("duplicate term");
  }
  bool linear = std::any_of(kept.begin(), kept.end(), [](const MonomialTerm& t) { return t.degree() == 1; });
  if (!linear) throw InvalidGermError("linear part vanishes");
  terms_ = std::move(kept);
}

bool GermPoly::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const MonomialTerm& t) { return t.coeff.is_exact(); });
}

int GermPoly::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

const MonomialTerm* GermPoly::find(int component, const MultiIndex& exponents) const {
  MonomialTerm key{component, exponents, {}};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_key_less);
  if (it == terms_.end() || it->component != component || it->exponents != exponents) return nullptr;
  return &*it;
}

bool operator==(const GermPoly& a, const GermPoly& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.component != t.component || s.exponents != t.exponents || !(s.coeff == t.coeff)) return false;
  }
  return true;
}

namespace {

ComplexScalar parse_coeff(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("coeff must be an object");
  std::optional<Complex> approx;
  if (j.contains("re") || j.contains("im")) {
    double re = 0.0, im = 0.0;
    if (j.contains("re")) {
      if (!j["re"].is_number()) throw ParseError("coeff.re must be a number");
      re = j["re"].get<double>();
    }
    if (j.contains("im")) {
      if (!j["im"].is_number()) throw ParseError("coeff.im must be a number");
      im = j["im"].get<double>();
    }
    approx = Complex(re, im);
  }
  if (j.contains("exact")) {
    const auto& e = j["exact"];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("coeff.exact must be a pair of rational strings");
    GaussianRational q(parse_rational(e[0].get<std::string>()), parse_rational(e[1].get<std::string>()));
    ComplexScalar s = ComplexScalar::from_exact(q);
    if (approx) {
      double scale = std::max(1.0, std::abs(s.value()));
      if (std::abs(*approx - s.value()) > 1e-12 * scale)
        throw ParseError("coeff re/im disagree with exact value");
    }
    return s;
  }
  if (!approx) throw ParseError("coeff needs re/im or exact");
  return ComplexScalar::from_value(*approx);
}

}  // namespace

GermPoly parse_germ(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("germ document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("missing integer field n");
  int n = doc["n"].get<int>();
  if (n <= 0) throw ParseError("zero dimension");
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw ParseError("missing array field terms");

  std::vector<MonomialTerm> terms;
  for (const auto& jt : doc["terms"]) {
    if (!jt.is_object()) throw ParseError("term must be an object");
    if (!jt.contains("component") || !jt["component"].is_number_integer())
      throw ParseError("term.component must be an integer");
    if (!jt.contains("exponents") || !jt["exponents"].is_array())
      throw ParseError("term.exponents must be an array");
    if (!jt.contains("coeff")) throw ParseError("term.coeff missing");
    MonomialTerm t;
    t.component = jt["component"].get<int>() - 1;
    if (t.component < 0 || t.component >= n) throw ParseError("term.component out of range");
    for (const auto& e : jt["exponents"]) {
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw ParseError("exponents must be nonnegative integers");
      t.exponents.push_back(e.get<int>());
    }
    if (static_cast<int>(t.exponents.size()) != n) throw ParseError("dimension mismatch in exponents");
    t.coeff = parse_coeff(jt["coeff"]);
    terms.push_back(std::move(t));
  }
  std::vector<MonomialTerm> sorted = terms;
  std::sort(sorted.begin(), sorted.end(), term_key_less);
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!term_key_less(sorted[i - 1], sorted[i])) throw ParseError("duplicate term");
  if (n < 2) throw ParseError("dimension must be at least 2");
  try {
    return GermPoly(n, std::move(terms));
  } catch (const InvalidGermError& e) {
    throw ParseError(e.what());
  }
}

GermPoly load_germ(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open germ file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ(buf.str());
}

std::string serialize_germ(const GermPoly& germ) {
  ordered_json doc;
  doc["n"] = germ.dimension();
  doc["terms"] = ordered_json::array();
  for (const auto& t : germ.terms()) {
    ordered_json jt;
    jt["component"] = t.component + 1;
    jt["exponents"] = t.exponents;
    ordered_json c;
    c["re"] = t.coeff.re;
    c["im"] = t.coeff.im;
    if (t.coeff.exact) c["exact"] = {to_string(t.coeff.exact->re()), to_string(t.coeff.exact->im())};
    jt["coeff"] = std::move(c);
    doc["terms"].push_back(std::move(jt));
  }
  return doc.dump(2) + "\n";
}

CVector evaluate(const GermPoly& germ, const CVector& z) {
  const int n = germ.dimension();
  if (static_cast<int>(z.size()) != n) throw PreconditionError("point dimension mismatch");
  CVector out(n, Complex(0.0, 0.0));
  for (const auto& t : germ.terms()) {
    Complex mono = t.coeff.value();
    for (int j = 0; j < n; ++j) {
      for (int e = 0; e < t.exponents[j]; ++e) mono *= z[j];
    }
    out[t.component] += mono;
  }
  return out;
}

GermPoly merge(const GermPoly& a, const GermPoly& b) {
  if (a.dimension() != b.dimension()) throw PreconditionError("merge of germs with different dimension");
  std::vector<MonomialTerm> out;
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && term_key_less(x[i], y[j]))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || term_key_less(y[j], x[i])) {
      out.push_back(y[j++]);
    } else {
      MonomialTerm t = x[i];
      t.coeff = x[i].coeff + y[j].coeff;
      out.push_back(std::move(t));
      ++i;
      ++j;
    }
  }
  return GermPoly(a.dimension(), std::move(out));
}

GermPoly scale(const GermPoly& germ, const ComplexScalar& factor) {
  std::vector<MonomialTerm> out = germ.terms();
  for (auto& t : out) t.coeff = t.coeff * factor;
  return GermPoly(germ.dimension(), std::move(out));
}

GermPoly permute(const GermPoly& germ, const std::vector<int>& perm) {
  const int n = germ.dimension();
  if (static_cast<int>(perm.size()) != n) throw PreconditionError("permutation size mismatch");
  std::vector<int> inverse(n, -1);
  for (int k = 0; k < n; ++k) {
    if (perm[k] < 0 || perm[k] >= n || inverse[perm[k]] != -1) throw PreconditionError("not a permutation");
    inverse[perm[k]] = k;
  }
  std::vector<MonomialTerm> out;
  for (const auto& t : germ.terms()) {
    MonomialTerm u;
    u.component = inverse[t.component];
    u.exponents.assign(n, 0);
    for (int k = 0; k < n; ++k) u.exponents[k] = t.exponents[perm[k]];
    u.coeff = t.coeff;
    out.push_back(std::move(u));
  }
  return GermPoly(n, std::move(out));
}

GermPoly diagonal_linear_germ(const std::vector<ComplexScalar>& eigenvalues) {
  const int n = static_cast<int>(eigenvalues.size());
  std::vector<MonomialTerm> terms;
  for (int i = 0; i < n; ++i) {
    MonomialTerm t;
    t.component = i;
    t.exponents.assign(n, 0);
    t.exponents[i] = 1;
    t.coeff = eigenvalues[i];
    terms.push_back(std::move(t));
  }
  return GermPoly(n, std::move(terms));
}

}  // namespace foliage
