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

#include "dahamod/matrix.hpp"

using namespace dahamod;
using R = Rational;
using M = Matrix<R>;

namespace {

M m2(R a, R b, R c, R d) { return M::from_rows({{a, b}, {c, d}}); }

M random_matrix(std::mt19937_64& rng, std::size_t n, int spread) {
  M m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = R(static_cast<long>(rng() % (2 * spread + 1)) - spread);
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  const auto id = rref(M::identity(3));
  CHECK(id.reduced == M::identity(3));
  CHECK(id.rank == 3);
  const auto ones = rref(m2(1, 1, 1, 1));
  CHECK(ones.reduced == m2(1, 1, 0, 0));
  CHECK(ones.rank == 1);
  const auto zero = rref(M(2, 2));
  CHECK(zero.reduced == M(2, 2));
  CHECK(zero.rank == 0);
}

TEST_CASE("kernel examples") {
  const auto k = kernel(m2(1, 1, 1, 1));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis[0][0] == -k.basis[0][1]);
  CHECK(kernel(M::identity(2)).dim() == 0);
  CHECK(kernel(M(2, 2)).dim() == 2);
}

TEST_CASE("determinant and inverse") {
  CHECK(det(M::identity(4)) == R(1));
  CHECK(det(m2(1, R(4, 3), 0, 1)) == R(1));
  const M swap = m2(0, 1, 1, 0);
  CHECK(det(swap) == R(-1));
  CHECK(inverse(swap) == swap);
  CHECK_THROWS_AS(inverse(m2(1, 2, 2, 4)), SingularMatrixError);
  CHECK(det(m2(1, 2, 2, 4)) == R(0));
}

TEST_CASE("sylvester examples") {
  std::vector<std::pair<M, M>> same{{M::identity(2), M::identity(2)}};
  CHECK(solve_sylvester_homogeneous<R>(same).dim() == 4);
  const M d = m2(1, 0, 0, 2);
  std::vector<std::pair<M, M>> diag{{d, d}};
  const auto s = solve_sylvester_homogeneous<R>(diag);
  REQUIRE(s.dim() == 2);
  for (const auto& v : s.basis) {
    CHECK(v[1].is_zero());
    CHECK(v[2].is_zero());
  }
  std::vector<std::pair<M, M>> bad{{M::identity(2), M::identity(3)}, {M::identity(3), M::identity(3)}};
  CHECK_THROWS_AS(solve_sylvester_homogeneous<R>(bad), ContractViolation);
}

TEST_CASE("span closure examples") {
  std::vector<M> id{M::identity(3)};
  CHECK(span_closure<R>(id) == 1);
  std::vector<M> diag{m2(1, 0, 0, 2)};
  CHECK(span_closure<R>(diag) == 2);
  std::vector<M> full{m2(0, 1, 0, 0), m2(0, 0, 1, 0)};
  CHECK(span_closure<R>(full) == 4);
  std::vector<M> upper{m2(1, 1, 0, 1), m2(2, 0, 0, 1)};
  CHECK(span_closure<R>(upper) == 3);
}

TEST_CASE("linear algebra properties") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const M a = random_matrix(rng, n, 3);
    const auto r = rref(a);
    CHECK(r.rank + kernel(a).dim() == n);
    for (const auto& v : kernel(a).basis) {
      const auto av = a.apply(v);
      for (const auto& x : av) CHECK(x.is_zero());
    }
    if (!det(a).is_zero()) {
      CHECK(a * inverse(a) == M::identity(n));
      CHECK(inverse(a) * a == M::identity(n));
      CHECK(det(a * a) == det(a) * det(a));
    } else {
      CHECK(r.rank < n);
    }
    const M b = random_matrix(rng, n, 2);
    std::vector<M> g1{a, b}, g2{b, a};
    CHECK(span_closure<R>(g1) == span_closure<R>(g2));
    CHECK(span_closure<R>(g1) <= n * n);
    std::vector<std::pair<M, M>> pairs{{a, a}, {b, b}};
    const auto sol = solve_sylvester_homogeneous<R>(pairs);
    CHECK(sol.dim() >= 1);
    for (const auto& v : sol.basis) {
      const M tm = reshape(v, n, n);
      CHECK(tm * a == a * tm);
      CHECK(tm * b == b * tm);
    }
  }
}

TEST_CASE("matrix contract checks") {
  CHECK_THROWS_AS(M(2, 2, std::vector<R>(3)), ContractViolation);
  CHECK_THROWS_AS(M::identity(2) + M::identity(3), ContractViolation);
  CHECK_THROWS_AS(M(2, 3) * M(2, 3), ContractViolation);
  CHECK(M::scalar(3, R(5)).scalar_value() == R(5));
  CHECK_FALSE(m2(1, 1, 0, 1).scalar_value().has_value());
  CHECK(matrix_power(m2(1, 1, 0, 1), 3) == m2(1, 3, 0, 1));
  CHECK(matrix_power(m2(1, 1, 0, 1), -2) == m2(1, -2, 0, 1));
}
