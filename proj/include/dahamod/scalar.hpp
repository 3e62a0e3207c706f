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

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dahamod/errors.hpp"
#include "dahamod/ratfun.hpp"
#include "dahamod/rational.hpp"

namespace dahamod {

// Contract shared by the two exact scalar backends.
template <class S>
concept ScalarField = std::regular<S> && requires(const S a, const S b, std::string_view text) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a.inverse() } -> std::same_as<S>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
  { S::parse(text) } -> std::same_as<S>;
  { validate_q(a) } -> std::same_as<bool>;
  { exact_sqrt(a) } -> std::same_as<std::optional<S>>;
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<RatFun>);

enum class Backend { Rational, RatFun };

template <class S>
constexpr Backend backend_of() {
  if constexpr (std::same_as<S, Rational>)
    return Backend::Rational;
  else
    return Backend::RatFun;
}

template <ScalarField S>
S scalar_pow(const S& x, std::int64_t n) {
  if (n < 0) {
    if (x.is_zero()) throw DomainError("zero raised to a negative power");
    return scalar_pow(x.inverse(), -n);
  }
  S result(1);
  S base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

// Roots of x^2 - c x + 1, i.e. the pair {k, 1/k} with k + 1/k = c, when they
// lie in the field. The first root is the one whose string is smaller.
template <ScalarField S>
std::optional<std::pair<S, S>> reciprocal_pair_from_sum(const S& c) {
  const auto disc = exact_sqrt(c * c - S(4));
  if (!disc) return std::nullopt;
  const S half = S(1) / S(2);
  S a = (c + *disc) * half;
  S b = (c - *disc) * half;
  if (b.str() < a.str()) std::swap(a, b);
  return std::pair<S, S>{a, b};
}

}  // namespace dahamod
