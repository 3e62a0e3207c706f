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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dahamod/matrix.hpp"
#include "dahamod/params.hpp"

namespace dahamod {

// Finite-dimensional module given by the matrices of t0..t3 and their
// inverses. Column j of a generator's matrix is the coordinate vector of the
// generator applied to basis vector j.
template <ScalarField S>
struct ModuleRep {
  std::size_t dim = 0;
  std::array<Matrix<S>, 4> t;
  std::array<Matrix<S>, 4> tinv;
  ParamQuadruple<S> params;
  TwistElement twist;
  std::string label;

  Matrix<S> X() const { return t[3] * t[0]; }
  Matrix<S> Y() const { return t[0] * t[1]; }
  Matrix<S> X_inv() const { return tinv[0] * tinv[3]; }
  Matrix<S> Y_inv() const { return tinv[1] * tinv[0]; }
  Matrix<S> X_pow(int e) const { return e >= 0 ? matrix_power(X(), e) : matrix_power(X_inv(), -e); }
  Matrix<S> Y_pow(int e) const { return e >= 0 ? matrix_power(Y(), e) : matrix_power(Y_inv(), -e); }
};

// ceil(i/2) for any integer i.
constexpr int ceil_half(int i) { return i >= 0 ? (i + 1) / 2 : -((-i) / 2); }
constexpr int floor_half(int i) { return i >= 0 ? i / 2 : -((-i + 1) / 2); }
// (-1)^i
constexpr int sign_pow(int i) { return (i % 2 == 0) ? 1 : -1; }

namespace detail {

template <ScalarField S>
void put(Matrix<S>& m, int row, int col, const S& value) {
  if (row < 0 || row >= static_cast<int>(m.rows())) return;
  m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) += value;
}

template <ScalarField S>
ModuleRep<S> finish_module(std::array<Matrix<S>, 4> t, const ParamQuadruple<S>& p, std::string label) {
  ModuleRep<S> m{p.dim(), std::move(t), {}, p, TwistElement(0), std::move(label)};
  for (std::size_t i = 0; i < 4; ++i) m.tinv[i] = inverse(m.t[i]);
  return m;
}

}  // namespace detail

// The (d+1)-dimensional module E(k0,k1,k2,k3), d odd, k0^2 = q^{-d-1}.
template <ScalarField S>
ModuleRep<S> make_E(const ParamQuadruple<S>& p) {
  if (p.parity() != Parity::Even) throw ContractViolation("make_E needs an even quadruple");
  const int d = p.d();
  const std::size_t n = p.dim();
  const S& q = p.q();
  const auto& [k0, k1, k2, k3] = p.k();
  const S k0i = k0.inverse(), k1i = k1.inverse(), k2i = k2.inverse(), k3i = k3.inverse();
  const S kk = k0 * k1 * k3;
  const S kki = kk.inverse();
  auto qp = [&](int e) { return scalar_pow(q, e); };
  auto rho_odd = [&](int i) { return (kk * qp(i) - k2) * (kk * qp(i) - k2i); };
  auto even_factor = [&](int i) { return (S(1) - qp(i)) * (S(1) - k0 * k0 * qp(i)); };

  std::array<Matrix<S>, 4> t{Matrix<S>(n, n), Matrix<S>(n, n), Matrix<S>(n, n), Matrix<S>(n, n)};
  using detail::put;
  for (int i = 0; i <= d; ++i) {
    // t0
    if (i == 0 || i == d) {
      put(t[0], i, i, k0);
    } else if (i % 2 == 0) {
      put(t[0], i - 1, i, k0i * qp(-i) * even_factor(i));
      put(t[0], i, i, k0 + k0i - k0i * qp(-i));
    } else {
      put(t[0], i, i, k0i * qp(-i - 1));
      put(t[0], i + 1, i, -k0i * qp(-i - 1));
    }
    // t1
    if (i == 0) {
      put(t[1], 0, 0, k1);
      put(t[1], 1, 0, k1i);
    } else if (i % 2 == 0) {
      put(t[1], i - 1, i, -k1 * even_factor(i));
      put(t[1], i, i, k1);
      put(t[1], i + 1, i, k1i);
    } else {
      put(t[1], i, i, k1i);
    }
    // t2
    if (i % 2 == 0) {
      put(t[2], i, i, kki * qp(-i - 1));
      put(t[2], i + 1, i, -kki * qp(-i - 1));
    } else {
      put(t[2], i - 1, i, rho_odd(i) * kki * qp(-i));
      put(t[2], i, i, k2 + k2i - kki * qp(-i));
    }
    // t3
    if (i % 2 == 0) {
      put(t[3], i, i, k3);
    } else {
      put(t[3], i - 1, i, -k3i * rho_odd(i));
      put(t[3], i, i, k3i);
      if (i < d) put(t[3], i + 1, i, k3);
    }
  }
  return detail::finish_module(std::move(t), p, "E");
}

// The (d+1)-dimensional module O(k0,k1,k2,k3), d even, k0 k1 k2 k3 = q^{-d-1}.
template <ScalarField S>
ModuleRep<S> make_O(const ParamQuadruple<S>& p) {
  if (p.parity() != Parity::Odd) throw ContractViolation("make_O needs an odd quadruple");
  const int d = p.d();
  const std::size_t n = p.dim();
  const S& q = p.q();
  const auto& [k0, k1, k2, k3] = p.k();
  const S k0i = k0.inverse(), k1i = k1.inverse(), k2i = k2.inverse(), k3i = k3.inverse();
  auto qp = [&](int e) { return scalar_pow(q, e); };
  auto even_factor = [&](int i) { return (S(1) - qp(i)) * (S(1) - k0 * k0 * qp(i)); };

  std::array<Matrix<S>, 4> t{Matrix<S>(n, n), Matrix<S>(n, n), Matrix<S>(n, n), Matrix<S>(n, n)};
  using detail::put;
  for (int i = 0; i <= d; ++i) {
    // t0
    if (i == 0) {
      put(t[0], 0, 0, k0);
    } else if (i % 2 == 0) {
      put(t[0], i - 1, i, k0i * qp(-i) * even_factor(i));
      put(t[0], i, i, k0 + k0i - k0i * qp(-i));
    } else {
      put(t[0], i, i, k0i * qp(-i - 1));
      put(t[0], i + 1, i, -k0i * qp(-i - 1));
    }
    // t1; for d = 0 the lone basis vector is both first and last.
    if (i == d && d > 0) {
      put(t[1], d - 1, d, -k1 * even_factor(d));
      put(t[1], d, d, k1);
    } else if (i == 0) {
      put(t[1], 0, 0, k1);
      if (d > 0) put(t[1], 1, 0, k1i);
    } else if (i % 2 == 0) {
      put(t[1], i - 1, i, -k1 * even_factor(i));
      put(t[1], i, i, k1);
      put(t[1], i + 1, i, k1i);
    } else {
      put(t[1], i, i, k1i);
    }
    // t2
    if (i == d) {
      put(t[2], d, d, k2);
    } else if (i % 2 == 0) {
      put(t[2], i, i, k2 * qp(d - i));
      put(t[2], i + 1, i, -k2 * qp(d - i));
    } else {
      put(t[2], i - 1, i, -k2 * (S(1) - k2i * k2i * qp(i - d - 1)) * (S(1) - qp(d - i + 1)));
      put(t[2], i, i, k2 + k2i - k2 * qp(d - i + 1));
    }
    // t3
    if (i % 2 == 0) {
      put(t[3], i, i, k3);
    } else {
      put(t[3], i - 1, i, -k3i * (S(1) - k2i * k2i * qp(i - d - 1)) * (S(1) - qp(i - d - 1)));
      put(t[3], i, i, k3i);
      put(t[3], i + 1, i, k3);
    }
  }
  return detail::finish_module(std::move(t), p, "O");
}

template <ScalarField S>
ModuleRep<S> make_module(const ParamQuadruple<S>& p) {
  return p.parity() == Parity::Even ? make_E(p) : make_O(p);
}

template <ScalarField S>
struct RelationCheck {
  std::string name;
  bool pass = true;
  // Left side minus right side, kept only on failure.
  std::optional<Matrix<S>> difference;
};

template <ScalarField S>
struct RelationReport {
  std::vector<RelationCheck<S>> checks;
  // Scalar by which t_i + t_i^{-1} acts, when it is scalar.
  std::array<std::optional<S>, 4> central;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Checks t_i t_i^{-1} = t_i^{-1} t_i = I, that t_i + t_i^{-1} is scalar, and
// t0 t1 t2 t3 = q^{-1} I. Failures are recorded, never thrown.
template <ScalarField S>
RelationReport<S> verify_relations(const ModuleRep<S>& m) {
  RelationReport<S> r;
  const std::size_t n = m.dim;
  const auto id = Matrix<S>::identity(n);
  auto record = [&r](std::string name, const Matrix<S>& lhs, const Matrix<S>& rhs) {
    RelationCheck<S> c{std::move(name), lhs == rhs, std::nullopt};
    if (!c.pass && lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols()) c.difference = lhs - rhs;
    r.checks.push_back(std::move(c));
  };
  for (std::size_t i = 0; i < 4; ++i) {
    const auto si = std::to_string(i);
    if (m.t[i].rows() != n || m.t[i].cols() != n || m.tinv[i].rows() != n || m.tinv[i].cols() != n) {
      r.checks.push_back({"shape of t" + si, false, std::nullopt});
      return r;
    }
    record("t" + si + "*tinv" + si + " = I", m.t[i] * m.tinv[i], id);
    record("tinv" + si + "*t" + si + " = I", m.tinv[i] * m.t[i], id);
    const auto c = m.t[i] + m.tinv[i];
    r.central[i] = c.scalar_value();
    RelationCheck<S> sc{"t" + si + " + tinv" + si + " is scalar", r.central[i].has_value(), std::nullopt};
    if (!sc.pass) sc.difference = c;
    r.checks.push_back(std::move(sc));
  }
  record("t0*t1*t2*t3 = q^-1 I", m.t[0] * m.t[1] * m.t[2] * m.t[3],
         Matrix<S>::scalar(n, m.params.q().inverse()));
  return r;
}

// Scalars by which c_i = t_i + t_i^{-1} act.
template <ScalarField S>
std::array<S, 4> central_character(const ModuleRep<S>& m) {
  std::array<S, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    auto s = (m.t[i] + m.tinv[i]).scalar_value();
    if (!s) throw ContractViolation("t" + std::to_string(i) + " + t" + std::to_string(i) +
                                    "^-1 does not act as a scalar");
    out[i] = *s;
  }
  return out;
}

// Expected central character: (k_i + k_i^{-1}) read through the twist.
template <ScalarField S>
std::array<S, 4> expected_central_character(const ModuleRep<S>& m) {
  std::array<S, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& k = m.params.k((i + static_cast<std::size_t>(m.twist.value)) % 4);
    out[i] = k + k.inverse();
  }
  return out;
}

struct CheckReport {
  std::vector<Condition> items;

  bool all_pass() const { return all_hold(items); }
  void add(std::string description, bool holds) { items.push_back({std::move(description), holds}); }
};

enum class Ladder { X, Y };

// Ladder identities on each basis vector v_i of an untwisted E or O module:
//   (1 - k0 k3 q^{2 ceil(i/2)} X^{(-1)^{i-1}}) v_i = rho_i v_{i-1}  (0 at i = 0)
//   (1 - k0 k1 q^{2 ceil(i/2)} Y^{(-1)^{i-1}}) v_i = v_{i+1}        (0 at i = d)
template <ScalarField S>
CheckReport ladder_check(const ModuleRep<S>& m, Ladder which) {
  if (m.twist.value != 0) throw ContractViolation("ladder identities apply to untwisted modules");
  const auto& p = m.params;
  const int d = p.d();
  const auto id = Matrix<S>::identity(m.dim);
  const Matrix<S> fwd = which == Ladder::X ? m.X() : m.Y();
  const Matrix<S> bwd = which == Ladder::X ? m.X_inv() : m.Y_inv();
  const S coef = which == Ladder::X ? p.k(0) * p.k(3) : p.k(0) * p.k(1);
  CheckReport r;
  for (int i = 0; i <= d; ++i) {
    const Matrix<S>& g = sign_pow(i - 1) > 0 ? fwd : bwd;
    const auto op = id - g * (coef * scalar_pow(p.q(), 2 * ceil_half(i)));
    const auto lhs = op.column(static_cast<std::size_t>(i));
    Vec<S> rhs(m.dim);
    if (which == Ladder::X) {
      if (i > 0) rhs[static_cast<std::size_t>(i - 1)] = eval_sequence(SequenceKind::Rho, p, i);
    } else if (i < d) {
      rhs[static_cast<std::size_t>(i + 1)] = S(1);
    }
    r.add(std::string(which == Ladder::X ? "X" : "Y") + " ladder at v" + std::to_string(i), lhs == rhs);
  }
  return r;
}

// Two commutation identities that hold in the algebra itself:
//   X t0 - t0 X^{-1} = X c0 - c3
//   q^{-1} X^{-1} t2 - q t2 X = q^{-1} X^{-1} c2 - c1
template <ScalarField S>
CheckReport commutation_check(const ModuleRep<S>& m) {
  const auto c = central_character(m);
  const auto X = m.X();
  const auto Xi = m.X_inv();
  const auto id = Matrix<S>::identity(m.dim);
  const S& q = m.params.q();
  const S qi = q.inverse();
  CheckReport r;
  r.add("X t0 - t0 X^-1 = X c0 - c3", X * m.t[0] - m.t[0] * Xi == X * c[0] - id * c[3]);
  r.add("q^-1 X^-1 t2 - q t2 X = q^-1 X^-1 c2 - c1",
        (Xi * m.t[2]) * qi - (m.t[2] * X) * q == (Xi * qi) * c[2] - id * c[1]);
  return r;
}

// prod_{i=0}^{d} (1 - a q^{2 ceil(i/2)} Y^{(-1)^{i-1}}) applied to v_0.
template <ScalarField S>
Vec<S> y_product_on_v0(const ModuleRep<S>& m, const S& a, int count) {
  const auto Y = m.Y();
  const auto Yi = m.Y_inv();
  Vec<S> v(m.dim);
  v[0] = S(1);
  for (int i = 0; i < count; ++i) {
    const auto& g = sign_pow(i - 1) > 0 ? Y : Yi;
    const S coef = a * scalar_pow(m.params.q(), 2 * ceil_half(i));
    const auto gv = g.apply(v);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= coef * gv[j];
  }
  return v;
}

// The product of all d+1 Y-ladder factors annihilates v_0.
template <ScalarField S>
bool quotient_annihilates_v0(const ModuleRep<S>& m) {
  if (m.twist.value != 0) throw ContractViolation("quotient check applies to untwisted modules");
  const auto v = y_product_on_v0(m, m.params.k(0) * m.params.k(1), m.params.d() + 1);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// On E: w_i = prod_{h<i} (1 - k0 k1^{-1} q^{2 ceil(h/2)} Y^{(-1)^{h-1}}) v_0 is a
// basis and satisfies the X-ladder with phi in place of rho, and the Y-ladder
// with k1 inverted.
template <ScalarField S>
CheckReport w_ladder_check(const ModuleRep<S>& m) {
  const auto& p = m.params;
  if (p.parity() != Parity::Even || m.twist.value != 0)
    throw ContractViolation("w-ladder applies to untwisted E modules");
  const int d = p.d();
  const S a = p.k(0) * p.k(1).inverse();
  std::vector<Vec<S>> w;
  for (int i = 0; i <= d; ++i) w.push_back(y_product_on_v0(m, a, i));
  CheckReport r;
  r.add("w vectors form a basis", span_of(m.dim, w).dim() == m.dim);
  const auto X = m.X(), Xi = m.X_inv(), Y = m.Y(), Yi = m.Y_inv();
  for (int i = 0; i <= d; ++i) {
    const auto& wi = w[static_cast<std::size_t>(i)];
    const bool fwd = sign_pow(i - 1) > 0;
    const S lift = scalar_pow(p.q(), 2 * ceil_half(i));
    {
      const auto gx = (fwd ? X : Xi).apply(wi);
      Vec<S> lhs = wi;
      for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= p.k(0) * p.k(3) * lift * gx[j];
      Vec<S> rhs(m.dim);
      if (i > 0) {
        const S phi = eval_sequence(SequenceKind::Phi, p, i);
        for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = phi * w[static_cast<std::size_t>(i - 1)][j];
      }
      r.add("X ladder at w" + std::to_string(i), lhs == rhs);
    }
    {
      const auto gy = (fwd ? Y : Yi).apply(wi);
      Vec<S> lhs = wi;
      for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] -= a * lift * gy[j];
      const Vec<S> rhs = i < d ? w[static_cast<std::size_t>(i + 1)] : Vec<S>(m.dim);
      r.add("Y ladder at w" + std::to_string(i), lhs == rhs);
    }
  }
  return r;
}

}  // namespace dahamod
