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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dahamod/analysis.hpp"
#include "dahamod/params.hpp"

namespace dahamod {

// Deterministic parameter sampler. Free k's come from the nonzero rationals
// with numerator and denominator of absolute value at most 16; the
// constrained coordinate is then repaired.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {
    for (long n = -16; n <= 16; ++n)
      for (long d = 1; d <= 16; ++d) {
        const Rational r(n, d);
        if (n != 0 && r.denominator() == d) pool_.push_back(r);
      }
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin() { return (rng_() & 1) != 0; }
  const Rational& pool_value() { return pool_[index(pool_.size())]; }

  template <ScalarField S>
  std::array<S, 4> free_k() {
    return {S(pool_value()), S(pool_value()), S(pool_value()), S(pool_value())};
  }

  // k0 = +-q^{-(d+1)/2}.
  template <ScalarField S>
  ParamQuadruple<S> even(const S& q, int d) {
    auto k = free_k<S>();
    k[0] = scalar_pow(q, -(d + 1) / 2);
    if (coin()) k[0] = -k[0];
    return ParamQuadruple<S>::make(q, k, d, Parity::Even);
  }

  // k3 = q^{-d-1} / (k0 k1 k2).
  template <ScalarField S>
  ParamQuadruple<S> odd(const S& q, int d) {
    auto k = free_k<S>();
    k[3] = scalar_pow(q, -d - 1) / (k[0] * k[1] * k[2]);
    return ParamQuadruple<S>::make(q, k, d, Parity::Odd);
  }

  template <ScalarField S>
  ParamQuadruple<S> any(const S& q, int d, Parity parity) {
    return parity == Parity::Even ? even(q, d) : odd(q, d);
  }

  // Random irreducible sample; gives up after a bounded number of draws.
  template <ScalarField S>
  std::optional<ParamQuadruple<S>> irreducible(const S& q, int d, Parity parity) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      auto p = any(q, d, parity);
      if (criterion(p)) return p;
    }
    return std::nullopt;
  }

  // Sample violating exactly one irreducibility condition, or nothing when
  // no such sample is reachable (d = 0 in the odd family).
  template <ScalarField S>
  std::optional<ParamQuadruple<S>> adversarial(const S& q, int d, Parity parity) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      auto p = parity == Parity::Even ? adversarial_even(q, d) : adversarial_odd(q, d);
      if (!p) return std::nullopt;
      const auto cs = parity == Parity::Even ? criterion_E_conditions(*p) : criterion_O_conditions(*p);
      std::size_t failing = 0;
      for (const auto& c : cs) failing += c.holds ? 0 : 1;
      if (failing == 1) return p;
    }
    return std::nullopt;
  }

 private:
  template <ScalarField S>
  std::optional<ParamQuadruple<S>> adversarial_even(const S& q, int d) {
    auto k = free_k<S>();
    k[0] = scalar_pow(q, -(d + 1) / 2);
    if (coin()) k[0] = -k[0];
    const int i = 1 + 2 * static_cast<int>(index(static_cast<std::size_t>((d + 1) / 2)));
    const S target = scalar_pow(q, -i);
    switch (index(4)) {
      case 0: k[3] = target / (k[0] * k[1] * k[2]); break;
      case 1: k[3] = target * k[1] / (k[0] * k[2]); break;
      case 2: k[3] = target * k[2] / (k[0] * k[1]); break;
      default: k[3] = k[0] * k[1] * k[2] / target; break;
    }
    return ParamQuadruple<S>::make(q, k, d, Parity::Even);
  }

  template <ScalarField S>
  std::optional<ParamQuadruple<S>> adversarial_odd(const S& q, int d) {
    if (d < 2) return std::nullopt;
    auto k = free_k<S>();
    const int i = 2 + 2 * static_cast<int>(index(static_cast<std::size_t>(d / 2)));
    const std::size_t j = index(4);
    k[j] = scalar_pow(q, -i / 2);
    if (coin()) k[j] = -k[j];
    const std::size_t fix = j == 3 ? 2 : 3;
    S rest(1);
    for (std::size_t x = 0; x < 4; ++x)
      if (x != fix) rest *= k[x];
    k[fix] = scalar_pow(q, -d - 1) / rest;
    return ParamQuadruple<S>::make(q, k, d, Parity::Odd);
  }

  std::mt19937_64 rng_;
  std::vector<Rational> pool_;
};

}  // namespace dahamod
