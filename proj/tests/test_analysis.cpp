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

#include "dahamod/analysis.hpp"
#include "dahamod/sampling.hpp"

using namespace dahamod;
using R = Rational;
using P = ParamQuadruple<R>;
using M = Matrix<R>;

namespace {

P e_example() { return P::make(R(2), {R(1, 2), R(1), R(3), R(1)}, 1, Parity::Even); }
P e_reducible() { return P::make(R(2), {R(1, 2), R(1), R(1), R(1)}, 1, Parity::Even); }
P o_d0() { return P::make(R(2), {R(1), R(1), R(1), R(1, 2)}, 0, Parity::Odd); }
P o_d2() { return P::make(R(2), {R(1), R(1), R(3), R(1, 24)}, 2, Parity::Odd); }
P o_d2_reducible() { return P::make(R(2), {R(1), R(1), R(1, 2), R(1, 4)}, 2, Parity::Odd); }

P with_k(const P& p, std::array<R, 4> k) { return P::make(p.q(), k, p.d(), p.parity()); }

ModuleRep<R> conjugate(const ModuleRep<R>& m, const M& g) {
  ModuleRep<R> out = m;
  const M gi = inverse(g);
  for (std::size_t i = 0; i < 4; ++i) {
    out.t[i] = g * m.t[i] * gi;
    out.tinv[i] = g * m.tinv[i] * gi;
  }
  return out;
}

M random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    M g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = R(static_cast<long>(rng() % 7) - 3);
    if (!det(g).is_zero()) return g;
  }
}

bool upper_zero(const M& l) {
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = i + 1; j < l.cols(); ++j)
      if (!l(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("criterion examples") {
  CHECK(criterion_E(e_example()));
  CHECK_FALSE(criterion_E(e_reducible()));
  CHECK(criterion_O(o_d0()));
  CHECK_FALSE(criterion_O(o_d2_reducible()));
  CHECK(criterion_O(o_d2()));
  CHECK_THROWS_AS(criterion_E(o_d2()), ContractViolation);
  CHECK_THROWS_AS(criterion_O(e_example()), ContractViolation);
  // k0^2 = q^-2 for d = 3 makes the even-index condition fail.
  const P p3 = P::make(R(2), {R(1, 4), R(3), R(5), R(7)}, 3, Parity::Even);
  CHECK(criterion_E(p3) == in_EP(p3));
}

TEST_CASE("burnside examples") {
  CHECK(closure_dimension(make_E(e_example())) == 4);
  CHECK(burnside_irreducible(make_E(e_example())));
  CHECK(closure_dimension(make_E(e_reducible())) < 4);
  CHECK_FALSE(burnside_irreducible(make_E(e_reducible())));
  CHECK(burnside_irreducible(make_O(o_d0())));
  CHECK(burnside_irreducible(make_O(o_d2())));
  CHECK_FALSE(burnside_irreducible(make_O(o_d2_reducible())));
}

TEST_CASE("criteria agree with the closure oracle") {
  Sampler s(2026);
  for (int t = 0; t < 60; ++t) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const int d = parity == Parity::Even ? 1 + 2 * static_cast<int>(s.index(3)) : 2 * static_cast<int>(s.index(3));
      auto p = t % 2 == 0 ? s.adversarial(R(2), d, parity) : std::optional<P>(s.any(R(2), d, parity));
      if (!p) continue;
      INFO(d);
      CHECK(criterion(*p) == burnside_irreducible(make_module(*p)));
    }
  }
}

TEST_CASE("L-matrix examples") {
  const auto l0 = l_matrix(o_d0(), LRoute::Closed);
  REQUIRE(l0.entries.rows() == 1);
  CHECK(l0.entries(0, 0) == R(1));
  for (const auto& p : {e_example(), o_d2(), P::make(R(3), {R(1, 9), R(2), R(5), R(-1, 3)}, 3, Parity::Even)}) {
    const auto all = l_matrix_all_routes(p);
    REQUIRE(all.size() == 3);
    const auto diag = l_diagonal_formula(p);
    for (const auto& l : all) {
      CHECK(upper_zero(l.entries));
      for (std::size_t i = 0; i < diag.size(); ++i) CHECK(l.entries(i, i) == diag[i]);
    }
    if (criterion(p))
      for (const auto& x : diag) CHECK_FALSE(x.is_zero());
  }
  const auto red = l_matrix_all_routes(o_d2_reducible());
  CHECK(red.size() == 2);
  CHECK_THROWS_AS(l_matrix(o_d2_reducible(), LRoute::Closed), ContractViolation);
}

TEST_CASE("L-matrix routes agree on random parameters") {
  Sampler s(7);
  for (int t = 0; t < 20; ++t) {
    const auto pe = s.even(R(2), 1 + 2 * static_cast<int>(s.index(3)));
    CHECK_NOTHROW(l_matrix_all_routes(pe));
    const auto po = s.odd(R(2), 2 * static_cast<int>(s.index(4)));
    CHECK_NOTHROW(l_matrix_all_routes(po));
  }
}

TEST_CASE("twisting") {
  const auto m = make_E(e_example());
  const auto c = central_character(m);
  CHECK(twist(m, TwistElement(0)).t == m.t);
  const auto back = twist(twist(m, TwistElement(1)), TwistElement(3));
  CHECK(back.t == m.t);
  CHECK(back.twist == TwistElement(0));
  for (int e = 0; e < 4; ++e) {
    const auto tw = twist(m, TwistElement(e));
    CHECK(verify_relations(tw).all_pass());
    const auto ct = central_character(tw);
    const auto ft = det_fingerprint(tw);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(ct[i] == c[(i + static_cast<std::size_t>(e)) % 4]);
      CHECK(ft[i] == det_fingerprint(m)[(i + static_cast<std::size_t>(e)) % 4]);
    }
    CHECK(ct == expected_central_character(tw));
  }
}

TEST_CASE("determinant fingerprints") {
  const auto fe = det_fingerprint(make_E(e_example()));
  CHECK(fe == std::array<R, 4>{R(1, 4), R(1), R(1), R(1)});
  const auto fo = det_fingerprint(make_O(o_d0()));
  CHECK(fo == std::array<R, 4>{R(1), R(1), R(1), R(1, 2)});
  CHECK(det_fingerprint(make_O(o_d2())) == o_d2().k());
}

TEST_CASE("intertwiner examples") {
  const auto a = make_E(e_example());
  const auto self = find_intertwiner(a, a);
  CHECK(self.status == IntertwinerStatus::Found);
  CHECK(self.solution_dim == 1);
  CHECK(self.matrix->scalar_value().has_value());

  const auto b = make_E(with_k(e_example(), {R(1, 2), R(1), R(1, 3), R(1)}));
  const auto flip = find_intertwiner(a, b);
  REQUIRE(flip.status == IntertwinerStatus::Found);
  CHECK(flip.matrix->scalar_value().has_value());

  CHECK(find_intertwiner(a, twist(a, TwistElement(1))).status == IntertwinerStatus::None);
  CHECK(find_intertwiner(a, make_O(o_d2())).status == IntertwinerStatus::None);
  CHECK(find_intertwiner(a, make_E(P::make(R(2), {R(1, 2), R(2), R(3), R(1)}, 1, Parity::Even))).status ==
        IntertwinerStatus::None);

  const auto r = make_E(e_reducible());
  const auto rr = find_intertwiner(r, r);
  CHECK(rr.status == IntertwinerStatus::Found);
  CHECK(rr.solution_dim >= 1);
}

TEST_CASE("isomorphisms between sign-inverted and rotated modules") {
  Sampler s(31);
  for (int t = 0; t < 10; ++t) {
    const auto pe = s.irreducible(R(2), 1 + 2 * static_cast<int>(s.index(3)), Parity::Even);
    REQUIRE(pe);
    const auto m = make_E(*pe);
    for (const auto& sign : SignTriple::all())
      CHECK(find_intertwiner(m, make_E(orbit_act(*pe, sign))).status == IntertwinerStatus::Found);
    for (int e = 1; e < 4; ++e)
      CHECK(find_intertwiner(m, twist(m, TwistElement(e))).status == IntertwinerStatus::None);

    const auto po = s.irreducible(R(2), 2 * static_cast<int>(s.index(3)), Parity::Odd);
    REQUIRE(po);
    const auto o = make_O(*po);
    const auto& k = po->k();
    for (int r = 1; r < 4; ++r) {
      std::array<R, 4> rot;
      for (std::size_t i = 0; i < 4; ++i) rot[i] = k[(i + static_cast<std::size_t>(r)) % 4];
      const auto other = twist(make_O(with_k(*po, rot)), TwistElement(4 - r));
      CHECK(find_intertwiner(o, other).status == IntertwinerStatus::Found);
    }
  }
}

TEST_CASE("classification examples") {
  const auto res = classify(make_E(e_example()));
  CHECK(res.twist == TwistElement(0));
  CHECK(res.parity == Parity::Even);
  CHECK(res.params == canonical_orbit_rep(e_example()));
  CHECK(res.params.k(2) == R(1, 3));
  CHECK_FALSE(det(res.certificate).is_zero());

  const auto ro = classify(make_O(o_d2()));
  CHECK(ro.params == o_d2());
  CHECK(ro.twist == TwistElement(0));
  CHECK(classify(make_O(o_d0())).params == o_d0());

  CHECK_THROWS_AS(classify(make_E(e_reducible())), ContractViolation);
  auto broken = make_E(e_example());
  broken.t[2](0, 0) = R(9);
  CHECK_THROWS_AS(classify(broken), ContractViolation);
}

TEST_CASE("classification round trips") {
  Sampler s(55);
  std::mt19937_64 rng(55);
  for (int t = 0; t < 12; ++t) {
    const auto pe = s.irreducible(R(2), 1 + 2 * static_cast<int>(s.index(3)), Parity::Even);
    REQUIRE(pe);
    for (int e = 0; e < 4; ++e) {
      const auto m = conjugate(twist(make_E(*pe), TwistElement(e)), random_invertible(rng, pe->dim()));
      const auto res = classify(m);
      CHECK(res.twist == TwistElement(e));
      CHECK(res.params == canonical_orbit_rep(*pe));
      const auto ref = twist(make_E(res.params), TwistElement(e));
      for (std::size_t i = 0; i < 4; ++i) CHECK(res.certificate * m.t[i] == ref.t[i] * res.certificate);
    }
    const auto po = s.irreducible(R(2), 2 * static_cast<int>(s.index(3)), Parity::Odd);
    REQUIRE(po);
    const auto res = classify(conjugate(make_O(*po), random_invertible(rng, po->dim())));
    CHECK(res.params == *po);
  }
}

TEST_CASE("simultaneous eigenvectors") {
  const auto m = make_E(e_example());
  const auto v = simultaneous_eigenvector(m, 3, 0);
  REQUIRE(v);
  CHECK_FALSE((*v)[0].is_zero());
  CHECK((*v)[1].is_zero());
  CHECK(simultaneous_eigenvector(make_O(o_d0()), 1, 2).has_value());
  CHECK_THROWS_AS(simultaneous_eigenvector(m, 4, 0), ContractViolation);
  Sampler s(13);
  for (int t = 0; t < 20; ++t) {
    const Parity parity = t % 2 ? Parity::Odd : Parity::Even;
    const int d = 2 * static_cast<int>(s.index(3)) + (parity == Parity::Even ? 1 : 0);
    const auto p = s.irreducible(R(2), d, parity);
    if (!p) continue;
    const auto mm = make_module(*p);
    CHECK((simultaneous_eigenvector(mm, 3, 0) || simultaneous_eigenvector(mm, 1, 2)));
  }
}
