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
#include "doctest.h"

#include <random>

#include "dahamod/params.hpp"

using namespace dahamod;
using R = Rational;
using P = ParamQuadruple<R>;

namespace {

P even_example() { return P::make(R(2), {R(1, 2), R(1), R(3), R(1)}, 1, Parity::Even); }

R random_k(std::mt19937_64& rng) {
  for (;;) {
    const long n = static_cast<long>(rng() % 13) - 6;
    const long d = 1 + static_cast<long>(rng() % 6);
    if (n != 0) return R(n, d);
  }
}

// Random even quadruple with q = 2; k0 fixed by the constraint.
P random_even(std::mt19937_64& rng, int d) {
  R k0 = scalar_pow(R(2), -(d + 1) / 2);
  if (rng() & 1) k0 = -k0;
  return P::make(R(2), {k0, random_k(rng), random_k(rng), random_k(rng)}, d, Parity::Even);
}

}  // namespace

TEST_CASE("sequence examples") {
  const P p = even_example();
  CHECK(eval_sequence(SequenceKind::Rho, p, 0) == R(0));
  CHECK(eval_sequence(SequenceKind::Rho, p, 1) == R(-4, 3));
  CHECK(eval_sequence(SequenceKind::Phi, p, 2) == R(0));
  for (auto kind : {SequenceKind::Phi, SequenceKind::Rho, SequenceKind::Chi, SequenceKind::Psi})
    CHECK(eval_sequence(kind, p, 0) == R(0));
}

TEST_CASE("rho vanishes at d+1 for the even family") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int d = 1 + 2 * static_cast<int>(rng() % 4);
    CHECK(eval_sequence(SequenceKind::Rho, random_even(rng, d), d + 1) == R(0));
  }
}

TEST_CASE("odd family sequences match their specialized forms") {
  const P p = P::make(R(2), {R(1), R(1), R(3), R(1, 24)}, 2, Parity::Odd);
  for (int i = 0; i <= 6; ++i) {
    CHECK_NOTHROW(eval_sequence(SequenceKind::Rho, p, i));
    CHECK_NOTHROW(eval_sequence(SequenceKind::Psi, p, i));
  }
}

TEST_CASE("theta examples") {
  CHECK(theta(R(2), R(1), 0) == R(1));
  CHECK(theta(R(2), R(1), 1) == R(1, 4));
  CHECK(theta(R(2), R(1), 2) == R(4));
  CHECK_THROWS_AS(theta(R(2), R(0), 1), ContractViolation);
  CHECK_FALSE(theta_coincidence(R(2), R(1), 0, 2));
  CHECK(theta_coincidence(R(2), R(7, 3), 5, 5));
  CHECK_FALSE(theta_coincidence(R(2), R(1), 0, 1));
  CHECK(theta_coincidence(R(2), R(1, 2), 0, 1));
}

TEST_CASE("theta coincidence agrees with brute comparison") {
  std::mt19937_64 rng(5);
  const R q(3, 2);
  for (int t = 0; t < 50; ++t) {
    R mu = random_k(rng);
    if (t % 5 == 0) mu = scalar_pow(q, -static_cast<int>(rng() % 9));
    for (int i = -20; i <= 20; ++i)
      for (int j = -20; j <= 20; ++j)
        REQUIRE(theta_coincidence(q, mu, i, j) == (theta(q, mu, i) == theta(q, mu, j)));
  }
}

TEST_CASE("membership examples") {
  CHECK(in_EP(even_example()));
  CHECK_FALSE(in_EP(P::make(R(2), {R(1, 2), R(1), R(1), R(1)}, 1, Parity::Even)));
  CHECK(in_OP(P::make(R(2), {R(1), R(1), R(1), R(1, 2)}, 0, Parity::Odd)));
  CHECK_FALSE(in_OP(P::make(R(2), {R(1), R(1), R(1, 2), R(1, 4)}, 2, Parity::Odd)));
  CHECK(in_OP(P::make(R(2), {R(1), R(1), R(3), R(1, 24)}, 2, Parity::Odd)));
  CHECK_THROWS_AS(in_EP(P::make(R(2), {R(1), R(1), R(1), R(1, 2)}, 0, Parity::Odd)), ContractViolation);
  CHECK_THROWS_AS(in_OP(even_example()), ContractViolation);
}

TEST_CASE("constraint violations are rejected") {
  CHECK_THROWS_AS(P::make(R(2), {R(1), R(1), R(3), R(1)}, 1, Parity::Even), ContractViolation);
  CHECK_THROWS_AS(P::make(R(2), {R(1, 2), R(1), R(3), R(1)}, 2, Parity::Even), ContractViolation);
  CHECK_THROWS_AS(P::make(R(2), {R(1), R(1), R(1), R(1)}, 0, Parity::Odd), ContractViolation);
  CHECK_THROWS_AS(P::make(R(1), {R(1), R(1), R(1), R(1)}, 0, Parity::Odd), ContractViolation);
  CHECK_THROWS_AS(P::make(R(-1), {R(1), R(1), R(1), R(-1)}, 0, Parity::Odd), ContractViolation);
  CHECK_THROWS_AS(P::make(R(2), {R(1, 2), R(0), R(3), R(1)}, 1, Parity::Even), ContractViolation);
  CHECK_THROWS_AS(P::make(R(2), {R(1, 2), R(1), R(3), R(1)}, -1, Parity::Even), ContractViolation);
  CHECK_NOTHROW(P::make(R(2), {R(-1, 2), R(1), R(3), R(1)}, 1, Parity::Even));
}

TEST_CASE("sign orbit action") {
  const P p = even_example();
  CHECK(orbit_act(p, SignTriple{}) == p);
  const P flipped = orbit_act(p, SignTriple{{1, -1, 1}});
  CHECK(flipped.k(1) == R(1));
  CHECK(flipped.k(2) == R(1, 3));
  CHECK(flipped.k(0) == R(1, 2));
  for (const auto& s : SignTriple::all()) CHECK(orbit_act(orbit_act(p, s), s) == p);
}

TEST_CASE("canonical orbit representative") {
  const P rep = canonical_orbit_rep(even_example());
  CHECK(rep.k(2) == R(1, 3));
  CHECK(rep.k(1) == R(1));
  CHECK(rep.k(3) == R(1));
  CHECK(canonical_orbit_rep(rep) == rep);
  const P fixed = P::make(R(2), {R(1, 2), R(1), R(1), R(1)}, 1, Parity::Even);
  CHECK(canonical_orbit_rep(fixed) == fixed);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const P q = random_even(rng, 1 + 2 * static_cast<int>(rng() % 3));
    const P c = canonical_orbit_rep(q);
    for (const auto& s : SignTriple::all()) CHECK(canonical_orbit_rep(orbit_act(q, s)) == c);
  }
}

TEST_CASE("EP membership is orbit invariant") {
  std::mt19937_64 rng(23);
  int members = 0, outsiders = 0;
  for (int t = 0; t < 200; ++t) {
    const int d = 1 + 2 * static_cast<int>(rng() % 3);
    P p = random_even(rng, d);
    if (t % 3 == 0) {
      // Force k0k1k2k3 = q^-i for a random odd i.
      const int i = 1 + 2 * static_cast<int>(rng() % ((d + 1) / 2));
      auto k = p.k();
      k[3] = scalar_pow(R(2), -i) / (k[0] * k[1] * k[2]);
      p = P::make(R(2), k, d, Parity::Even);
    }
    const bool in = in_EP(p);
    (in ? members : outsiders)++;
    for (const auto& s : SignTriple::all()) CHECK(in_EP(orbit_act(p, s)) == in);
  }
  CHECK(members > 0);
  CHECK(outsiders > 0);
}

TEST_CASE("group laws") {
  for (int a = 0; a < 4; ++a) {
    const TwistElement x(a);
    CHECK(x + TwistElement(0) == x);
    CHECK(x + x.inverse() == TwistElement(0));
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        CHECK((x + TwistElement(b)) + TwistElement(c) == x + (TwistElement(b) + TwistElement(c)));
  }
  CHECK(TwistElement(-1) == TwistElement(3));
  CHECK(TwistElement(9) == TwistElement(1));
  for (const auto& a : SignTriple::all()) {
    CHECK(a * SignTriple{} == a);
    CHECK(a * a == SignTriple{});
    for (const auto& b : SignTriple::all()) {
      CHECK(a * b == b * a);
      for (const auto& c : SignTriple::all()) CHECK((a * b) * c == a * (b * c));
    }
  }
}
