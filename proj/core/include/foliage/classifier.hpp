// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliage/germ.hpp"
#include "foliage/normal_form.hpp"
#include "foliage/spectral.hpp"

namespace foliage {

/// Topological class of a two-dimensional germ.
struct EquivClass2D {
  enum class Tag { Generic, Rational, Irrational, Resonant };

  Tag tag = Tag::Generic;
  long long p = 0;      // Rational: p >= q, coprime
  long long q = 0;
  double lambda = 0.0;  // Irrational: representative >= 1
  bool exact = false;   // Irrational: value derived from exact input
  int m = 0;            // Resonant

  static EquivClass2D generic() { return {}; }
  static EquivClass2D rational(long long p, long long q);
  static EquivClass2D irrational(double lambda, bool exact);
  static EquivClass2D resonant(int m);

  std::string name() const;
  std::string to_string() const;
};

/// Irrational values compare with this relative tolerance.
inline constexpr double kIrrationalMatchTol = 1e-9;

bool operator==(const EquivClass2D& a, const EquivClass2D& b);

struct Classification2D {
  std::optional<EquivClass2D> cls;  // empty when undecidable
  Canonical2D canonical;
  std::vector<std::string> certificate;
  std::optional<RationalityTest> rationality;

  bool decided() const { return cls.has_value(); }
  /// Throws UndecidableError when the class could not be certified.
  const EquivClass2D& value() const;
};

/// Throws PreconditionError (n != 2) or NotPoincareError.
Classification2D classify_2d(const GermPoly& germ);

enum class Verdict { Equivalent, NotEquivalent, Unknown };
std::string to_string(Verdict v);

struct Equivalence2D {
  Verdict result = Verdict::Unknown;
  std::string certificate;
  Classification2D first;
  Classification2D second;

  bool equivalent() const { return result == Verdict::Equivalent; }
};

Equivalence2D equivalent_2d(const GermPoly& g1, const GermPoly& g2);

struct NdVerdict {
  Verdict result = Verdict::Unknown;
  std::vector<std::string> reasons;
};

/// Equivalence test in any dimension under the ray-configuration criterion.
NdVerdict conjectured_equivalent_nd(const GermPoly& g1, const GermPoly& g2);

bool pairwise_R_independent(const std::vector<Eigenvalue>& eigs);

/// Restriction of a field to the coordinate subspace spanned by `coords`
/// (components outside are dropped, other variables set to zero).
GermPoly restrict_to(const GermPoly& germ, const std::vector<int>& coords);

}  // namespace foliage
