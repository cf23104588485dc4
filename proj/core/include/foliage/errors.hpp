// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foliage {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed germ text. `position` is a byte offset into the input when one
/// is known, otherwise npos.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

class InvalidGermError : public Error {
 public:
  using Error::Error;
};

class NotPoincareError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A non-resonant divisor fell below the numeric safety margin.
class NearResonanceError : public Error {
 public:
  NearResonanceError(const std::string& what, double divisor)
      : Error(what), divisor_(divisor) {}
  double divisor() const noexcept { return divisor_; }

 private:
  double divisor_;
};

/// The field is (numerically) tangent to the sphere: |<theta(z), z>| <= tol.
class TangencyError : public Error {
 public:
  TangencyError(const std::string& what, double margin) : Error(what), margin_(margin) {}
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

class StepCollapseError : public Error {
 public:
  using Error::Error;
};

/// Floating input cannot certify whether a ratio is rational.
class UndecidableError : public Error {
 public:
  using Error::Error;
};

}  // namespace foliage
