// Copyright 2026 The zwtick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zwtick {

/// Raised when a textual input (scalar, diagram, matrix, ...) is malformed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/**
 * Exact element of the cyclotomic field Q[w], w = exp(i*pi/4).
 *
 * Stored as rational coefficients on the basis {1, w, w^2, w^3}; w^4 = -1.
 * The representation is unique, so equality is coefficient-wise.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) { c_[0] = value; }  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& value) { c_[0] = value; c_[0].canonicalize(); }
  Scalar(mpq_class a0, mpq_class a1, mpq_class a2, mpq_class a3);

  /// p/q as a scalar; q must be nonzero.
  static Scalar rational(long p, long q);
  /// w^k for any integer k.
  static Scalar omega(int k = 1);
  /// The imaginary unit (stored as w^2).
  static Scalar i() { return omega(2); }
  /// sqrt(2) = w - w^3.
  static Scalar sqrt2();

  const mpq_class& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_real() const;

  Scalar conj() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Lexicographic order on coefficients; only meant for canonical sorting.
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.c_ < b.c_; }

  /// Double-precision embedding. Throws std::overflow_error if a coefficient
  /// does not fit in a double.
  std::complex<double> to_complex() const;

  /// Exact sign of a real scalar (a + b*sqrt(2)): -1, 0 or +1.
  /// Throws std::domain_error for non-real input.
  int real_sign() const;

  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  std::array<mpq_class, 4> c_{};
};

Scalar conjugate(const Scalar& x);
std::complex<double> to_complex_float(const Scalar& x);
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace zwtick
