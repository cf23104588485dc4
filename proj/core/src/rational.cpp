// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#include "foliage/rational.hpp"

#include <cmath>
#include <limits>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Integer parse_integer(std::string_view text, std::size_t offset, bool allow_sign) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits in rational", offset + i);
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!is_digit(text[i])) throw ParseError("unexpected character in rational", offset + i);
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

// Exact value of a finite double.
Rational exact_from_double(double x) {
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Integer num = scaled;
  exponent -= 53;
  if (exponent >= 0) return Rational(num << exponent);
  return Rational(num, Integer(1) << -exponent);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0, true));
  Integer num = parse_integer(text.substr(0, slash), 0, true);
  Integer den = parse_integer(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) {
  Integer num = numerator(r);
  const Integer& den = denominator(r);
  if (num == 0) return 0.0;
  bool negative = num < 0;
  if (negative) num = -num;

  long long e = static_cast<long long>(msb(num)) - static_cast<long long>(msb(den));
  long long shift = 54 - e;
  Integer q, rem;
  if (shift >= 0) {
    divide_qr(Integer(num << shift), den, q, rem);
  } else {
    divide_qr(num, Integer(den << -shift), q, rem);
  }
  bool sticky = rem != 0;
  long long bits = static_cast<long long>(msb(q)) + 1;
  long long drop = bits - 53;
  Integer low = q & ((Integer(1) << drop) - 1);
  Integer half = Integer(1) << (drop - 1);
  q >>= drop;
  if (low > half || (low == half && (sticky || bit_test(q, 0)))) q += 1;
  double mant = static_cast<double>(q.convert_to<unsigned long long>());
  double value = std::ldexp(mant, static_cast<int>(drop - shift));
  return negative ? -value : value;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer n = numerator(r), d = denominator(r);
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n == 0) throw PreconditionError("division by zero in Q(i)");
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::complex<double> to_complex(const GaussianRational& z) {
  return {to_double(z.re()), to_double(z.im())};
}

std::string to_string(const GaussianRational& z) {
  if (z.im() == 0) return to_string(z.re());
  std::string im = to_string(z.im() < 0 ? Rational(-z.im()) : z.im());
  if (z.re() == 0) return (z.im() < 0 ? "-" : "") + im + "i";
  return to_string(z.re()) + (z.im() < 0 ? "-" : "+") + im + "i";
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational{};
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((*modulus + z.re()) / 2);
  auto y = rational_sqrt((*modulus - z.re()) / 2);
  if (!x || !y) return std::nullopt;
  Rational yi = z.im() < 0 ? Rational(-*y) : *y;
  return GaussianRational{*x, yi};
}

RationalityTest recognize_rational(double x, long long max_denominator, double tolerance) {
  RationalityTest out;
  out.max_denominator = max_denominator;
  out.tolerance = tolerance;
  if (!std::isfinite(x)) {
    out.outcome = RationalityTest::Outcome::Undecidable;
    return out;
  }
  const Rational exact = exact_from_double(x);
  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));

  // Convergents h/k of the exact binary value.
  Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
  Rational rest = exact;
  bool have_best = false;
  bool noisy_rejection = false;
  for (int iter = 0; iter < 200; ++iter) {
    Integer a = numerator(rest) / denominator(rest);
    if (numerator(rest) < 0 && a * denominator(rest) != numerator(rest)) a -= 1;  // floor
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;

    Rational diff = exact - Rational(h, k);
    if (diff < 0) diff = -diff;
    double err = to_double(diff);
    double qd = static_cast<double>(k.convert_to<long long>());
    ContinuedFractionWitness w{h.convert_to<long long>(), k.convert_to<long long>(), err};
    if (err < tolerance / (qd * qd)) {
      out.outcome = RationalityTest::Outcome::Rational;
      out.witness = w;
      return out;
    }
    if (err <= noise) noisy_rejection = true;
    if (!have_best || err < out.witness.error) {
      out.witness = w;
      have_best = true;
    }
    Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  out.outcome = noisy_rejection ? RationalityTest::Outcome::Undecidable
                                : RationalityTest::Outcome::Irrational;
  return out;
}

}  // namespace foliage
