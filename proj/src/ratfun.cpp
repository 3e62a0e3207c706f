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
#include "dahamod/ratfun.hpp"

#include <regex>
#include <sstream>

#include "dahamod/errors.hpp"

namespace dahamod {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim_int(p);
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_primitive_int(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    const mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c.value() * l;
    out.push_back(scaled.get_num());
  }
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b (deg a >= deg b), computed in Z[x].
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational();
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::scaled(const Rational& s) const {
  if (s.is_zero()) return Poly();
  Poly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  rem = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  const Rational inv_lead = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational f = rem.leading() * inv_lead;
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      rem.c_[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  quot = Poly(std::move(q));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = to_primitive_int(a);
  IntPoly y = to_primitive_int(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_rem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> v;
  v.reserve(x.size());
  for (const auto& c : x) v.emplace_back(mpq_class(c));
  return Poly(std::move(v)).monic();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].str();
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  std::vector<Rational> v;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  if (v.empty()) throw DomainError("empty polynomial literal");
  return Poly(std::move(v));
}

RatFun::RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    const Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      Poly r;
      Poly::divmod(num_, g, num_, r);
      Poly::divmod(den_, g, den_, r);
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFun RatFun::variable() {
  return RatFun(Poly({Rational(0), Rational(1)}), Poly(Rational(1)), Normalized{});
}

RatFun RatFun::parse(std::string_view text) {
  const std::string s(text);
  if (const auto bar = s.find('|'); bar != std::string::npos)
    return RatFun(Poly::parse(s.substr(0, bar)), Poly::parse(s.substr(bar + 1)));

  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  static const std::regex monomial(
      R"(^([+-]?)(\d+(?:/\d+)?)?(?:\*?(q)(?:\^\(?([+-]?\d+)\)?)?)?$)");
  std::smatch m;
  if (!std::regex_match(compact, m, monomial) || (!m[2].matched && !m[3].matched))
    throw DomainError("malformed scalar literal '" + s + "'");
  Rational coef = m[2].matched ? Rational::parse(m[2].str()) : Rational(1);
  if (m[1].str() == "-") coef = -coef;
  if (!m[3].matched) return RatFun(coef);
  const int e = m[4].matched ? std::stoi(m[4].str()) : 1;
  if (e >= 0) return RatFun(Poly::monomial(coef, e), Poly(Rational(1)));
  return RatFun(Poly(coef), Poly::monomial(Rational(1), -e));
}

std::string RatFun::str() const { return num_.str() + " | " + den_.str(); }

Rational RatFun::constant() const {
  return num_.coeff(0) / den_.coeff(0);
}

Rational RatFun::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw DomainError("rational function pole at " + x.str());
  return num_.eval(x) / d;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return RatFun(den_, num_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

std::optional<Poly> poly_sqrt(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (p.degree() % 2 != 0) return std::nullopt;
  const auto lead_root = exact_sqrt(p.leading());
  if (!lead_root) return std::nullopt;
  const int m = p.degree() / 2;
  std::vector<Rational> s(static_cast<std::size_t>(m) + 1);
  s[static_cast<std::size_t>(m)] = *lead_root;
  const Rational two_lead = Rational(2) * *lead_root;
  for (int k = 1; k <= m; ++k) {
    Rational acc = p.coeff(2 * m - k);
    for (int i = 1; i < k; ++i)
      acc -= s[static_cast<std::size_t>(m - i)] * s[static_cast<std::size_t>(m - k + i)];
    s[static_cast<std::size_t>(m - k)] = acc / two_lead;
  }
  Poly root(std::move(s));
  if (!(root * root == p)) return std::nullopt;
  return root;
}

}  // namespace

std::optional<RatFun> exact_sqrt(const RatFun& x) {
  if (x.is_zero()) return RatFun();
  auto n = poly_sqrt(x.num());
  auto d = poly_sqrt(x.den());
  if (!n || !d) return std::nullopt;
  return RatFun(*n, *d);
}

bool validate_q(const RatFun& q) {
  if (!q.is_constant()) return true;
  return validate_q(q.constant());
}

}  // namespace dahamod
