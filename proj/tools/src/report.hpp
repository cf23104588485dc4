// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "foliage/classifier.hpp"
#include "foliage/normal_form.hpp"
#include "foliage/resonance.hpp"
#include "foliage/spectral.hpp"
#include "foliage/sphere_trace.hpp"

namespace foliage::report {

using Json = nlohmann::ordered_json;

Json complex(Complex z);
Json scalar(const ComplexScalar& s);
Json germ(const GermPoly& g);
Json spectrum(const Spectrum& s);
Json resonance(const Resonance& r);
Json class_2d(const Classification2D& c);
Json canonical(const Canonical2D& c);
Json rationality(const RationalityTest& t);
Json normal_form(const NormalFormResult& nf);
Json closure(const Closure& c);
Json profile(const TorusProfile& p);
Json slope(const SlopeEstimate& s);
Json holonomy(const Holonomy& h);

}  // namespace foliage::report
