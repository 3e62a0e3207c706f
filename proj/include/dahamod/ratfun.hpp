/*
 Copyright 2026 The dahamod Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dahamod/rational.hpp"

namespace dahamod {

// Dense univariate polynomial over Q, coefficients in ascending degree, with
// no trailing zeros. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(int i) const;

  Rational eval(const Rational& x) const;
  Poly scaled(const Rational& s) const;
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);

  // Monic gcd. Inputs are scaled to primitive integer polynomials and the
  // remainder sequence is kept primitive, so only integer coefficients are
  // combined during elimination.
  static Poly gcd(const Poly& a, const Poly& b);

  // Comma-separated coefficients, ascending; "0" for the zero polynomial.
  std::string str() const;
  static Poly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Element of Q(q): numerator/denominator coprime, denominator monic.
class RatFun {
 public:
  RatFun() : num_(), den_(Rational(1)) {}
  RatFun(long n) : RatFun(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c);                // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  // The formal variable q.
  static RatFun variable();

  // Accepts the serialized "num | den" form, any rational literal, or a
  // monomial such as "q", "-q^-2", "3/4*q^5".
  static RatFun parse(std::string_view text);

  // "num-coeffs | den-coeffs", ascending degree, e.g. "0,1 | 1" for q.
  std::string str() const;

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Constant value; only meaningful when is_constant().
  Rational constant() const;

  // Evaluation at a rational point; throws DomainError if the
  // denominator vanishes there.
  Rational eval(const Rational& x) const;

  RatFun inverse() const;

  RatFun operator-() const { return RatFun(-num_, den_, Normalized{}); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Normalized {};
  RatFun(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

std::optional<RatFun> exact_sqrt(const RatFun& x);

// True iff q is a non-constant rational function, or a constant passing the
// rational rule.
bool validate_q(const RatFun& q);

}  // namespace dahamod
