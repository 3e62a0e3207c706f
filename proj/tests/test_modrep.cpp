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

#include "dahamod/laurent.hpp"
#include "dahamod/sampling.hpp"

using namespace dahamod;
using R = Rational;
using F = RatFun;
using P = ParamQuadruple<R>;
using M = Matrix<R>;

namespace {

P e_example() { return P::make(R(2), {R(1, 2), R(1), R(3), R(1)}, 1, Parity::Even); }
P e_reducible() { return P::make(R(2), {R(1, 2), R(1), R(1), R(1)}, 1, Parity::Even); }
P o_d0() { return P::make(R(2), {R(1), R(1), R(1), R(1, 2)}, 0, Parity::Odd); }
P o_d2() { return P::make(R(2), {R(1), R(1), R(3), R(1, 24)}, 2, Parity::Odd); }

M m2(R a, R b, R c, R d) { return M::from_rows({{a, b}, {c, d}}); }

template <ScalarField S>
bool is_zero(const Vec<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("E module matrices for the d=1 example") {
  const auto m = make_E(e_example());
  REQUIRE(m.dim == 2);
  CHECK(m.t[0] == M::scalar(2, R(1, 2)));
  CHECK(m.t[1] == m2(1, 0, 1, 1));
  CHECK(m.t[2] == m2(1, R(-4, 3), -1, R(7, 3)));
  CHECK(m.t[3] == m2(1, R(4, 3), 0, 1));
  CHECK(m.t[1] * m.t[2] * m.t[3] == M::identity(2));
  CHECK(m.twist == TwistElement(0));
  const auto c = central_character(m);
  CHECK(c[0] == R(5, 2));
  CHECK(c[1] == R(2));
  CHECK(c[2] == R(10, 3));
  CHECK(c[3] == R(2));
  CHECK(verify_relations(m).all_pass());
}

TEST_CASE("reducible E example has an invariant line") {
  const auto m = make_E(e_reducible());
  CHECK(verify_relations(m).all_pass());
  const Vec<R> v1{R(0), R(1)};
  for (const auto& t : m.t) CHECK(t.apply(v1)[0] == R(0));
}

TEST_CASE("O module examples") {
  const auto m0 = make_O(o_d0());
  REQUIRE(m0.dim == 1);
  CHECK(m0.t[0] == M::scalar(1, R(1)));
  CHECK(m0.t[1] == M::scalar(1, R(1)));
  CHECK(m0.t[2] == M::scalar(1, R(1)));
  CHECK(m0.t[3] == M::scalar(1, R(1, 2)));
  CHECK(verify_relations(m0).all_pass());
  const auto c0 = central_character(m0);
  CHECK(c0[3] == R(5, 2));
  CHECK(c0[0] == R(2));

  const auto m2 = make_O(o_d2());
  CHECK(m2.dim == 3);
  CHECK(verify_relations(m2).all_pass());
  CHECK(central_character(m2) == expected_central_character(m2));
  CHECK(central_character(m2)[2] == R(10, 3));
}

TEST_CASE("construction rejects the wrong family") {
  CHECK_THROWS_AS(make_E(o_d2()), ContractViolation);
  CHECK_THROWS_AS(make_O(e_example()), ContractViolation);
}

TEST_CASE("fault injection is reported") {
  auto m = make_E(e_example());
  m.t[2](0, 0) = m.t[2](0, 0) + R(1);
  const auto r = verify_relations(m);
  CHECK_FALSE(r.all_pass());
  bool product_flagged = false;
  for (const auto& c : r.checks)
    if (c.name == "t0*t1*t2*t3 = q^-1 I") {
      product_flagged = !c.pass;
      CHECK(c.difference.has_value());
    }
  CHECK(product_flagged);

  auto n = make_E(e_example());
  n.t[1](1, 0) = R(5);
  CHECK_THROWS_AS(central_character(n), ContractViolation);
}

TEST_CASE("ladder identities") {
  const auto m = make_E(e_example());
  const M x_op = M::identity(2) - m.X_inv() * R(1, 2);  // i = 0 uses X^{-1}
  CHECK(is_zero(x_op.apply(Vec<R>{R(1), R(0)})));
  // i = 1: (1 - k0 k3 q^2 X) v1 = rho_1 v0.
  const M x1 = M::identity(2) - m.X() * R(2);
  const auto out = x1.apply(Vec<R>{R(0), R(1)});
  CHECK(out[0] == R(-4, 3));
  CHECK(out[1] == R(0));
  // i = d: (1 - k0 k1 q^2 Y) v1 = 0.
  CHECK(is_zero((M::identity(2) - m.Y() * R(2)).apply(Vec<R>{R(0), R(1)})));
  CHECK(ladder_check(m, Ladder::X).all_pass());
  CHECK(ladder_check(m, Ladder::Y).all_pass());
}

TEST_CASE("module identities over a random grid") {
  Sampler s(97);
  for (int t = 0; t < 100; ++t) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const int d = parity == Parity::Even ? 1 + 2 * static_cast<int>(s.index(4))
                                           : 2 * static_cast<int>(s.index(4));
      const auto p = s.any(R(2), d, parity);
      const auto m = make_module(p);
      INFO(d);
      REQUIRE(verify_relations(m).all_pass());
      CHECK(central_character(m) == expected_central_character(m));
      CHECK(ladder_check(m, Ladder::X).all_pass());
      CHECK(ladder_check(m, Ladder::Y).all_pass());
      CHECK(commutation_check(m).all_pass());
      CHECK(quotient_annihilates_v0(m));
      if (parity == Parity::Even) CHECK(w_ladder_check(m).all_pass());
    }
  }
}

TEST_CASE("symbolic q modules") {
  const F q = F::parse("q");
  const auto p = ParamQuadruple<F>::make(q, {q.inverse(), F(R(1)), F(R(3)), F(R(1))}, 1, Parity::Even);
  const auto m = make_E(p);
  CHECK(verify_relations(m).all_pass());
  CHECK(ladder_check(m, Ladder::X).all_pass());
  CHECK(commutation_check(m).all_pass());
  const F q2 = q * q;
  const auto po = ParamQuadruple<F>::make(q, {F(R(2)), F(R(1)), F(R(3)), (q2 * q * F(R(6))).inverse()}, 2,
                                          Parity::Odd);
  const auto mo = make_O(po);
  CHECK(verify_relations(mo).all_pass());
  CHECK(quotient_annihilates_v0(mo));
}

TEST_CASE("universal module generators") {
  const HeckeParams<R> h{R(2), {R(1, 2), R(3), R(5, 7), R(-2)}};
  const auto t0 = verma_apply(VermaGen::T0, basis_vector<R>(0), h);
  CHECK(t0 == SparseVec<R>{{0, R(1, 2)}});
  const auto t1 = verma_apply(VermaGen::T1, basis_vector<R>(0), h);
  CHECK(t1 == SparseVec<R>{{0, R(3)}, {1, R(1, 3)}});
  CHECK(verma_ladder_check(h, 12).all_pass());
  for (int i = 0; i <= 6; ++i)
    for (auto [g, gi] : {std::pair{VermaGen::T0, VermaGen::T0Inv}, {VermaGen::T1, VermaGen::T1Inv},
                         {VermaGen::T2, VermaGen::T2Inv}, {VermaGen::T3, VermaGen::T3Inv},
                         {VermaGen::X, VermaGen::XInv}, {VermaGen::Y, VermaGen::YInv}})
      CHECK(verma_apply(g, verma_apply(gi, basis_vector<R>(i), h), h) == basis_vector<R>(i));
}

TEST_CASE("polynomial representation") {
  const HeckeParams<R> h{R(3), {R(2), R(-1, 2), R(5), R(7, 3)}};
  const LaurentPoly<R> one{{0, R(1)}};
  CHECK(poly_apply(VermaGen::T3, one, h) == LaurentPoly<R>{{0, R(7, 3)}});
  CHECK(poly_apply(VermaGen::T0, one, h) == LaurentPoly<R>{{0, R(2)}});
  CHECK(verma_basis_image(0, h) == one);
  // 1 - k0 k1 q z^{-1}
  CHECK(verma_basis_image(1, h) == LaurentPoly<R>{{-1, R(3)}, {0, R(1)}});

  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    LaurentPoly<R> f;
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < terms; ++j) {
      const long c = static_cast<long>(rng() % 19) - 9;
      if (c != 0) f[static_cast<int>(rng() % 9) - 4] = R(c, 1 + static_cast<long>(rng() % 4));
    }
    LaurentPoly<R> expected;
    for (const auto& [e, c] : f) expected[e + 1] = c / R(3);
    CHECK(poly_apply(VermaGen::T0, poly_apply(VermaGen::T1, f, h), h) == expected);
  }
  CHECK(intertwining_check(h, 10).all_pass());
}

TEST_CASE("half-integer helpers") {
  CHECK(ceil_half(0) == 0);
  CHECK(ceil_half(1) == 1);
  CHECK(ceil_half(4) == 2);
  CHECK(ceil_half(-3) == -1);
  CHECK(floor_half(3) == 1);
  CHECK(floor_half(-1) == -1);
  CHECK(sign_pow(3) == -1);
  CHECK(sign_pow(-2) == 1);
}
