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

#include <map>
#include <string>

#include "dahamod/modrep.hpp"
#include "dahamod/verma.hpp"

namespace dahamod {

// Laurent polynomial in z: exponent -> nonzero coefficient.
template <ScalarField S>
using LaurentPoly = std::map<int, S>;

namespace laurent {

template <ScalarField S>
LaurentPoly<S> add(const LaurentPoly<S>& a, const LaurentPoly<S>& b) {
  LaurentPoly<S> out = a;
  for (const auto& [e, c] : b) detail::add_to(out, e, c);
  return out;
}

template <ScalarField S>
LaurentPoly<S> scale(const S& s, const LaurentPoly<S>& a) {
  LaurentPoly<S> out;
  for (const auto& [e, c] : a) detail::add_to(out, e, s * c);
  return out;
}

template <ScalarField S>
LaurentPoly<S> mul(const LaurentPoly<S>& a, const LaurentPoly<S>& b) {
  LaurentPoly<S> out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) detail::add_to(out, e1 + e2, c1 * c2);
  return out;
}

// f(s z^{-1})
template <ScalarField S>
LaurentPoly<S> reflect(const LaurentPoly<S>& f, const S& s) {
  LaurentPoly<S> out;
  for (const auto& [e, c] : f) detail::add_to(out, -e, c * scalar_pow(s, e));
  return out;
}

// n / d, which must be exact.
template <ScalarField S>
LaurentPoly<S> divide_exact(const LaurentPoly<S>& n, const LaurentPoly<S>& d) {
  if (d.empty()) throw DomainError("Laurent division by zero");
  if (n.empty()) return {};
  const int dmin = d.begin()->first;
  const int dmax = d.rbegin()->first;
  const S lead_inv = d.rbegin()->second.inverse();
  LaurentPoly<S> rem = n;
  LaurentPoly<S> quot;
  while (!rem.empty() && rem.rbegin()->first - dmax >= rem.begin()->first - dmin) {
    const int e = rem.rbegin()->first;
    const S c = rem.rbegin()->second * lead_inv;
    quot[e - dmax] = c;
    for (const auto& [de, dc] : d) detail::add_to(rem, de + e - dmax, -c * dc);
  }
  if (!rem.empty()) throw InternalError("Laurent division left a remainder");
  return quot;
}

}  // namespace laurent

// Action on the polynomial representation C[z^{+-1}] by Demazure-Lusztig
// type operators.
template <ScalarField S>
LaurentPoly<S> poly_apply(VermaGen g, const LaurentPoly<S>& f, const HeckeParams<S>& h) {
  using namespace laurent;
  const S& q = h.q;
  const auto& [k0, k1, k2, k3] = h.k;
  const S c0 = k0 + k0.inverse(), c1 = k1 + k1.inverse(), c2 = k2 + k2.inverse(),
          c3 = k3 + k3.inverse();
  const LaurentPoly<S> den_q{{-2, -(q * q)}, {0, S(1)}};
  const LaurentPoly<S> den_1{{0, S(1)}, {2, S(-1)}};
  switch (g) {
    case VermaGen::T0: {
      const auto fs = reflect(f, q * q);
      const auto num = mul(LaurentPoly<S>{{-1, -(c1 * q)}, {0, c0}}, add(f, scale(S(-1), fs)));
      return add(scale(k0, fs), divide_exact(num, den_q));
    }
    case VermaGen::T1: {
      const auto fs = reflect(f, q * q);
      const LaurentPoly<S> a{{-1, -(c0 * q)}, {0, c1}};
      const LaurentPoly<S> b{{-1, -(k0 * q)}, {0, c1}, {1, -(q.inverse() * k0.inverse())}};
      const auto num = add(mul(a, f), mul(mul(b, LaurentPoly<S>{{-2, -(q * q)}}), fs));
      return divide_exact(num, den_q);
    }
    case VermaGen::T2: {
      const auto fs = reflect(f, S(1));
      const auto num = add(mul(LaurentPoly<S>{{0, c2}, {1, -c3}}, f),
                           mul(LaurentPoly<S>{{-1, k3.inverse()}, {0, -c2}, {1, k3}}, fs));
      return divide_exact(num, den_1);
    }
    case VermaGen::T3: {
      const auto fs = reflect(f, S(1));
      const auto num = mul(LaurentPoly<S>{{0, c3}, {1, -c2}}, add(f, scale(S(-1), fs)));
      return add(scale(k3, fs), divide_exact(num, den_1));
    }
    case VermaGen::T0Inv:
      return add(scale(c0, f), scale(S(-1), poly_apply(VermaGen::T0, f, h)));
    case VermaGen::T1Inv:
      return add(scale(c1, f), scale(S(-1), poly_apply(VermaGen::T1, f, h)));
    case VermaGen::T2Inv:
      return add(scale(c2, f), scale(S(-1), poly_apply(VermaGen::T2, f, h)));
    case VermaGen::T3Inv:
      return add(scale(c3, f), scale(S(-1), poly_apply(VermaGen::T3, f, h)));
    case VermaGen::X:
      return poly_apply(VermaGen::T3, poly_apply(VermaGen::T0, f, h), h);
    case VermaGen::Y:
      return poly_apply(VermaGen::T0, poly_apply(VermaGen::T1, f, h), h);
    case VermaGen::XInv:
      return poly_apply(VermaGen::T0Inv, poly_apply(VermaGen::T3Inv, f, h), h);
    case VermaGen::YInv:
      return poly_apply(VermaGen::T1Inv, poly_apply(VermaGen::T0Inv, f, h), h);
  }
  throw InternalError("unknown generator");
}

// Image of m_i under the intertwiner from the universal module to the
// polynomial representation: prod_{h<i} (1 - k0 k1 q^{2 ceil(h/2) - s} z^s)
// with s = +1 for odd h and s = -1 for even h.
template <ScalarField S>
LaurentPoly<S> verma_basis_image(int i, const HeckeParams<S>& h) {
  LaurentPoly<S> p{{0, S(1)}};
  const S kk = h.k[0] * h.k[1];
  for (int j = 0; j < i; ++j) {
    const int s = j % 2 != 0 ? 1 : -1;
    const LaurentPoly<S> factor{{0, S(1)}, {s, -(kk * scalar_pow(h.q, 2 * ceil_half(j) - s))}};
    p = laurent::mul(p, factor);
  }
  return p;
}

template <ScalarField S>
LaurentPoly<S> verma_to_poly(const SparseVec<S>& v, const HeckeParams<S>& h) {
  LaurentPoly<S> out;
  for (const auto& [i, c] : v) out = laurent::add(out, laurent::scale(c, verma_basis_image(i, h)));
  return out;
}

// Checks g(image of m_i) = image of (g m_i) for the four generators and i <= count.
template <ScalarField S>
CheckReport intertwining_check(const HeckeParams<S>& h, int count) {
  CheckReport r;
  static const VermaGen gens[] = {VermaGen::T0, VermaGen::T1, VermaGen::T2, VermaGen::T3};
  for (int i = 0; i <= count; ++i)
    for (int g = 0; g < 4; ++g) {
      const auto lhs = poly_apply(gens[g], verma_basis_image(i, h), h);
      const auto rhs = verma_to_poly(verma_apply(gens[g], basis_vector<S>(i), h), h);
      r.add("t" + std::to_string(g) + " intertwines at m" + std::to_string(i), lhs == rhs);
    }
  return r;
}

}  // namespace dahamod
