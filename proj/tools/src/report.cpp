// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

namespace foliage::report {

Json complex(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json scalar(const ComplexScalar& s) {
  Json j = complex(s.value());
  if (s.exact) j["exact"] = Json::array({to_string(s.exact->re()), to_string(s.exact->im())});
  return j;
}

Json germ(const GermPoly& g) { return Json::parse(serialize_germ(g)); }

Json spectrum(const Spectrum& s) {
  Json eigs = Json::array();
  for (const auto& e : s.eigenvalues) {
    Json j = complex(e.value);
    if (e.exact) j["exact"] = Json::array({to_string(e.exact->re()), to_string(e.exact->im())});
    eigs.push_back(std::move(j));
  }
  Json j{{"eigenvalues", eigs}, {"exact", s.exact}, {"poincare", s.poincare}, {"c", s.c},
         {"jordan_superdiagonal", s.jordan_superdiagonal}};
  if (s.surd) j["quadratic_pair"] = {{"center", to_string(s.surd->center)}, {"radicand", to_string(s.surd->radicand)}};
  if (s.poincare) j["ray_sizes"] = ray_configuration(s.eigenvalues).sizes();
  return j;
}

Json resonance(const Resonance& r) {
  return Json{{"target", r.target + 1}, {"m", r.m},         {"trivial", r.trivial},
              {"essential", r.essential}, {"exact", r.exact}, {"defect", r.defect}};
}

Json rationality(const RationalityTest& t) {
  const char* outcome = t.outcome == RationalityTest::Outcome::Rational     ? "Rational"
                        : t.outcome == RationalityTest::Outcome::Irrational ? "Irrational"
                                                                            : "Undecidable";
  return Json{{"outcome", outcome},
              {"witness", {{"p", t.witness.p}, {"q", t.witness.q}, {"error", t.witness.error}}},
              {"max_denominator", t.max_denominator},
              {"tolerance", t.tolerance}};
}

Json canonical(const Canonical2D& c) {
  Json j{{"type", c.type}, {"lambda", complex(c.lambda)}, {"ratio_exact", c.ratio_exact}, {"m", c.m},
         {"swapped", c.swapped}, {"resonant_coefficient_abs", c.resonant_coefficient_abs}};
  j["lambda_exact"] = c.lambda_exact ? Json(to_string(*c.lambda_exact)) : Json(nullptr);
  if (c.original_coefficient) j["original_coefficient"] = scalar(*c.original_coefficient);
  if (c.residual) j["representative"] = germ(*c.residual);
  return j;
}

Json class_2d(const Classification2D& c) {
  Json j;
  if (c.decided()) {
    const EquivClass2D& v = c.value();
    j["class"] = v.name();
    switch (v.tag) {
      case EquivClass2D::Tag::Rational:
        j["p"] = v.p;
        j["q"] = v.q;
        break;
      case EquivClass2D::Tag::Irrational:
        j["lambda"] = v.lambda;
        j["lambda_exact"] = v.exact;
        break;
      case EquivClass2D::Tag::Resonant:
        j["m"] = v.m;
        break;
      case EquivClass2D::Tag::Generic:
        break;
    }
  } else {
    j["class"] = nullptr;
  }
  j["decided"] = c.decided();
  j["canonical"] = canonical(c.canonical);
  j["certificate"] = c.certificate;
  if (c.rationality) j["rationality"] = rationality(*c.rationality);
  return j;
}

Json normal_form(const NormalFormResult& nf) {
  Json support = Json::array();
  for (const auto& t : nf.resonant_support) support.push_back({{"component", t.component + 1}, {"exponents", t.exponents}});
  return Json{{"degree", nf.degree},
              {"exact", nf.exact},
              {"normal", germ(nf.normal)},
              {"change", {{"forward", germ(nf.change.forward)}, {"inverse", germ(nf.change.inverse)}}},
              {"resonant_support", support},
              {"spectrum", spectrum(nf.spectrum)},
              {"min_divisor", nf.min_divisor}};
}

Json closure(const Closure& c) {
  if (!c.closed) return Json{{"kind", "NotClosed"}, {"min_return_distance", c.min_return_distance}};
  Json windings = Json::array();
  for (std::size_t i = 0; i < c.windings.size(); ++i)
    windings.push_back(c.winding_reliable[i] ? Json(c.windings[i]) : Json(nullptr));
  return Json{{"kind", "Closed"},
              {"period", c.period},
              {"windings", windings},
              {"winding_residual", c.winding_residual},
              {"return_distance", c.return_distance},
              {"direction_angle", c.direction_angle}};
}

Json profile(const TorusProfile& p) {
  Json j{{"kind", to_string(p.kind)}, {"spread", p.spread}};
  if (p.kind == ProfileKind::Constant) j["radius"] = p.radius;
  if (p.kind == ProfileKind::Monotone) j["direction"] = p.direction;
  if (p.kind == ProfileKind::UniqueMax) j["apex_index"] = p.apex_index;
  if (!p.detail.empty()) j["detail"] = p.detail;
  return j;
}

Json slope(const SlopeEstimate& s) {
  return Json{{"value", s.value},
              {"crossings_first", s.crossings_first},
              {"crossings_second", s.crossings_second},
              {"t_used", s.t_used},
              {"torus_distance", s.torus_distance}};
}

Json holonomy(const Holonomy& h) {
  if (!h.returned) return Json{{"kind", "NoReturn"}, {"drift", h.drift}};
  return Json{{"kind", "Ok"}, {"multiplier", complex(h.multiplier)}, {"residual", h.residual}, {"drift", h.drift}};
}

}  // namespace foliage::report
