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

#include "zwtick/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace zwtick {

namespace {

// Galois automorphism w -> w^k (k odd).
Scalar galois(const Scalar& x, int k) {
  Scalar out;
  for (int j = 0; j < 4; ++j) {
    if (sgn(x.coeff(j)) == 0) continue;
    out += Scalar(x.coeff(j)) * Scalar::omega(j * k);
  }
  return out;
}

}  // namespace

Scalar::Scalar(mpq_class a0, mpq_class a1, mpq_class a2, mpq_class a3)
    : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {
  for (auto& c : c_) c.canonicalize();
}

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::omega(int k) {
  k %= 8;
  if (k < 0) k += 8;
  Scalar out;
  if (k < 4) {
    out.c_[static_cast<std::size_t>(k)] = 1;
  } else {
    out.c_[static_cast<std::size_t>(k - 4)] = -1;
  }
  return out;
}

Scalar Scalar::sqrt2() { return omega(1) - omega(3); }

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_real() const { return conj() == *this; }

// w-bar = w^7 = -w^3, so (a0, a1, a2, a3) -> (a0, -a3, -a2, -a1).
Scalar Scalar::conj() const {
  Scalar out;
  out.c_[0] = c_[0];
  out.c_[1] = -c_[3];
  out.c_[2] = -c_[2];
  out.c_[3] = -c_[1];
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q[w]");
  // x^{-1} = s3(x) s5(x) s7(x) / N(x), with N(x) the (rational) field norm.
  Scalar rest = galois(*this, 3) * galois(*this, 5) * galois(*this, 7);
  Scalar norm = *this * rest;
  mpq_class n = norm.c_[0];
  Scalar out;
  for (std::size_t j = 0; j < 4; ++j) out.c_[j] = rest.c_[j] / n;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (std::size_t j = 0; j < 4; ++j) c_[j] += o.c_[j];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (std::size_t j = 0; j < 4; ++j) c_[j] -= o.c_[j];
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  // Fast paths: most entries met during diagram evaluation are 0 or 1.
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Scalar out;
  mpq_class t;
  for (std::size_t j = 0; j < 4; ++j) {
    if (sgn(a.c_[j]) == 0) continue;
    for (std::size_t k = 0; k < 4; ++k) {
      if (sgn(b.c_[k]) == 0) continue;
      t = a.c_[j] * b.c_[k];
      std::size_t e = j + k;
      if (e < 4) {
        out.c_[e] += t;
      } else {
        out.c_[e - 4] -= t;
      }
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
  Scalar out;
  for (std::size_t j = 0; j < 4; ++j) out.c_[j] = -c_[j];
  return out;
}

std::complex<double> Scalar::to_complex() const {
  std::array<double, 4> d{};
  for (std::size_t j = 0; j < 4; ++j) {
    d[j] = c_[j].get_d();
    if (!std::isfinite(d[j])) throw std::overflow_error("scalar coefficient exceeds double range");
  }
  const double h = std::sqrt(0.5);
  return {d[0] + h * d[1] - h * d[3], h * d[1] + d[2] + h * d[3]};
}

int Scalar::real_sign() const {
  if (!is_real()) throw std::domain_error("sign of a non-real scalar");
  // Real elements are a + b*sqrt(2) with a = c0, b = c1 (= -c3).
  const mpq_class& a = c_[0];
  const mpq_class& b = c_[1];
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  mpq_class lhs = a * a;
  mpq_class rhs = 2 * b * b;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // unreachable: sqrt(2) is irrational
  return c > 0 ? sa : sb;
}

std::string Scalar::str() const {
  std::string out;
  static const char* kSuffix[4] = {"", "w", "w^2", "w^3"};
  for (std::size_t j = 0; j < 4; ++j) {
    const mpq_class& c = c_[j];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (j == 0 || mag != 1) out += mag.get_str();
    out += kSuffix[j];
  }
  return out.empty() ? "0" : out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    if (text_.empty()) throw ParseError("empty scalar", 0);
    Scalar out;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        if (first && peek() == '+') throw ParseError("unexpected '+'", pos_);
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      Scalar term = parse_term();
      out += negative ? -term : term;
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  mpz_class parse_int() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar parse_term() {
    mpq_class coeff = 1;
    bool have_rational = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = parse_int();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = parse_int();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      have_rational = true;
    }
    int power = 0;
    if (peek() == 'w') {
      ++pos_;
      power = 1;
      if (peek() == '^') {
        ++pos_;
        char p = peek();
        if (p != '2' && p != '3') throw ParseError("exponent must be 2 or 3", pos_);
        power = p - '0';
        ++pos_;
      }
    } else if (!have_rational) {
      throw ParseError("expected rational or 'w'", pos_);
    }
    Scalar out;
    out = Scalar(coeff) * Scalar::omega(power);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

Scalar conjugate(const Scalar& x) { return x.conj(); }
std::complex<double> to_complex_float(const Scalar& x) { return x.to_complex(); }
Scalar parse_scalar(std::string_view text) { return Scalar::parse(text); }
std::string format_scalar(const Scalar& x) { return x.str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace zwtick
