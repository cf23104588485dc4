// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace foliage {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string to_string(const Rational& r);

/// Round-to-nearest-even conversion.
double to_double(const Rational& r);

/// Exact square root when `r` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long long re) : re_(re), im_(0) {}  // NOLINT: implicit from integer literals

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);  // throws on division by zero

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::complex<double> to_complex(const GaussianRational& z);
std::string to_string(const GaussianRational& z);

/// Square root inside Q(i), if one exists (either root; the one with
/// positive real part, or positive imaginary part when purely imaginary).
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

/// Best rational approximations of `x` by continued fractions.
struct ContinuedFractionWitness {
  long long p = 0;
  long long q = 1;
  double error = 0.0;  // |x - p/q|
};

/// Result of testing a double for rationality with denominator cap
/// `max_denominator` and acceptance |x - p/q| < tolerance / q^2.
struct RationalityTest {
  enum class Outcome { Rational, Irrational, Undecidable };
  Outcome outcome = Outcome::Irrational;
  ContinuedFractionWitness witness;  // accepted convergent, or best rejected one
  long long max_denominator = 0;
  double tolerance = 0.0;
};

RationalityTest recognize_rational(double x, long long max_denominator = 1'000'000,
                                   double tolerance = 1e-12);

}  // namespace foliage
