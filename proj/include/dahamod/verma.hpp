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

#include <algorithm>
#include <map>
#include <string>

#include "dahamod/matrix.hpp"
#include "dahamod/modrep.hpp"
#include "dahamod/params.hpp"

namespace dahamod {

// Finitely supported vector in the infinite-dimensional universal module,
// indexed by basis vector m_i, i >= 0. Only nonzero entries are stored.
template <ScalarField S>
using SparseVec = std::map<int, S>;

enum class VermaGen { T0, T1, T2, T3, T0Inv, T1Inv, T2Inv, T3Inv, X, Y, XInv, YInv };

namespace detail {

template <ScalarField S>
void add_to(SparseVec<S>& v, int i, const S& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

template <ScalarField S>
SparseVec<S> verma_apply_t(int g, const SparseVec<S>& v, const HeckeParams<S>& h) {
  const S& q = h.q;
  const auto& [k0, k1, k2, k3] = h.k;
  const S kk = k0 * k1 * k3;
  auto qp = [&](int e) { return scalar_pow(q, e); };
  auto even_factor = [&](int i) { return (S(1) - qp(i)) * (S(1) - k0 * k0 * qp(i)); };
  auto rho_odd = [&](int i) { return (kk * qp(i) - k2) * (kk * qp(i) - k2.inverse()); };
  SparseVec<S> out;
  for (const auto& [i, x] : v) {
    switch (g) {
      case 0:
        if (i == 0) {
          add_to(out, 0, k0 * x);
        } else if (i % 2 == 0) {
          add_to(out, i - 1, x * qp(-i) * even_factor(i) * k0.inverse());
          add_to(out, i, x * (k0 + k0.inverse() - qp(-i) * k0.inverse()));
        } else {
          add_to(out, i, x * qp(-i - 1) * k0.inverse());
          add_to(out, i + 1, -x * qp(-i - 1) * k0.inverse());
        }
        break;
      case 1:
        if (i == 0) {
          add_to(out, 0, k1 * x);
          add_to(out, 1, x * k1.inverse());
        } else if (i % 2 == 0) {
          add_to(out, i - 1, -x * k1 * even_factor(i));
          add_to(out, i, k1 * x);
          add_to(out, i + 1, x * k1.inverse());
        } else {
          add_to(out, i, x * k1.inverse());
        }
        break;
      case 2:
        if (i % 2 == 0) {
          add_to(out, i, x * qp(-i - 1) * kk.inverse());
          add_to(out, i + 1, -x * qp(-i - 1) * kk.inverse());
        } else {
          add_to(out, i - 1, x * rho_odd(i) * (kk * qp(i)).inverse());
          add_to(out, i, x * (k2 + k2.inverse() - qp(-i) * kk.inverse()));
        }
        break;
      default:
        if (i % 2 == 0) {
          add_to(out, i, k3 * x);
        } else {
          add_to(out, i - 1, -x * rho_odd(i) * k3.inverse());
          add_to(out, i, x * k3.inverse());
          add_to(out, i + 1, k3 * x);
        }
        break;
    }
  }
  return out;
}

// Solves t_g x = v. Each t_g moves indices by at most one, so x is found on a
// finite window; the window grows until the full residual vanishes.
template <ScalarField S>
SparseVec<S> verma_solve_t(int g, const SparseVec<S>& v, const HeckeParams<S>& h) {
  if (v.empty()) return {};
  const int top = v.rbegin()->first;
  for (int slack = 4; slack <= 64; slack *= 2) {
    const int n = top + 2 + slack + 1;
    const auto un = static_cast<std::size_t>(n);
    Matrix<S> aug(un, un + 1);
    for (int j = 0; j < n; ++j)
      for (const auto& [i, c] : verma_apply_t(g, SparseVec<S>{{j, S(1)}}, h))
        if (i < n) aug(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
    for (const auto& [i, c] : v) aug(static_cast<std::size_t>(i), un) = c;
    const auto red = rref(std::move(aug));
    if (red.rank != un || red.pivots.back() != un - 1) continue;
    SparseVec<S> x;
    for (std::size_t i = 0; i < un; ++i) add_to(x, static_cast<int>(i), red.reduced(i, un));
    if (verma_apply_t(g, x, h) == v) return x;
  }
  throw InternalError("inverse generator solve on the universal module did not converge");
}

}  // namespace detail

// Action of a generator or ladder operator on the universal module.
template <ScalarField S>
SparseVec<S> verma_apply(VermaGen g, const SparseVec<S>& v, const HeckeParams<S>& h) {
  using detail::verma_apply_t;
  using detail::verma_solve_t;
  switch (g) {
    case VermaGen::T0: return verma_apply_t(0, v, h);
    case VermaGen::T1: return verma_apply_t(1, v, h);
    case VermaGen::T2: return verma_apply_t(2, v, h);
    case VermaGen::T3: return verma_apply_t(3, v, h);
    case VermaGen::T0Inv: return verma_solve_t(0, v, h);
    case VermaGen::T1Inv: return verma_solve_t(1, v, h);
    case VermaGen::T2Inv: return verma_solve_t(2, v, h);
    case VermaGen::T3Inv: return verma_solve_t(3, v, h);
    case VermaGen::X: return verma_apply_t(3, verma_apply_t(0, v, h), h);
    case VermaGen::Y: return verma_apply_t(0, verma_apply_t(1, v, h), h);
    case VermaGen::XInv: return verma_solve_t(0, verma_solve_t(3, v, h), h);
    case VermaGen::YInv: return verma_solve_t(1, verma_solve_t(0, v, h), h);
  }
  throw InternalError("unknown generator");
}

template <ScalarField S>
SparseVec<S> basis_vector(int i) {
  return SparseVec<S>{{i, S(1)}};
}

template <ScalarField S>
SparseVec<S> sparse_axpy(const SparseVec<S>& x, const S& a, const SparseVec<S>& y) {
  SparseVec<S> out = x;
  for (const auto& [i, c] : y) detail::add_to(out, i, a * c);
  return out;
}

// Ladder identities on m_0..m_count of the universal module:
//   (1 - k0 k3 q^{2 ceil(i/2)} X^{(-1)^{i-1}}) m_i = rho_i m_{i-1}
//   (1 - k0 k1 q^{2 ceil(i/2)} Y^{(-1)^{i-1}}) m_i = m_{i+1}
template <ScalarField S>
CheckReport verma_ladder_check(const HeckeParams<S>& h, int count) {
  CheckReport r;
  for (int i = 0; i <= count; ++i) {
    const bool fwd = sign_pow(i - 1) > 0;
    const S lift = scalar_pow(h.q, 2 * ceil_half(i));
    const auto mi = basis_vector<S>(i);
    {
      const auto g = verma_apply(fwd ? VermaGen::X : VermaGen::XInv, mi, h);
      const auto lhs = sparse_axpy(mi, -(h.k[0] * h.k[3] * lift), g);
      SparseVec<S> rhs;
      if (i > 0) detail::add_to(rhs, i - 1, eval_sequence(SequenceKind::Rho, h, i));
      r.add("X ladder at m" + std::to_string(i), lhs == rhs);
    }
    {
      const auto g = verma_apply(fwd ? VermaGen::Y : VermaGen::YInv, mi, h);
      const auto lhs = sparse_axpy(mi, -(h.k[0] * h.k[1] * lift), g);
      r.add("Y ladder at m" + std::to_string(i), lhs == basis_vector<S>(i + 1));
    }
  }
  return r;
}

}  // namespace dahamod
