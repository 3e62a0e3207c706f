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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dahamod/matrix.hpp"
#include "dahamod/modrep.hpp"
#include "dahamod/params.hpp"

namespace dahamod {

// ---------------------------------------------------------------------------
// Irreducibility criteria

template <ScalarField S>
std::vector<Condition> criterion_E_conditions(const ParamQuadruple<S>& p) {
  if (p.parity() != Parity::Even) throw ContractViolation("criterion_E needs an even quadruple");
  std::vector<Condition> out;
  const S& q = p.q();
  for (int i = 2; i <= p.d() - 1; i += 2) {
    out.push_back({"q^" + std::to_string(i) + " != 1", !(scalar_pow(q, i) == S(1))});
    out.push_back({"k0^2 != q^-" + std::to_string(i), !(p.k(0) * p.k(0) == scalar_pow(q, -i))});
  }
  for (auto& c : ep_conditions(p)) out.push_back(std::move(c));
  return out;
}

template <ScalarField S>
std::vector<Condition> criterion_O_conditions(const ParamQuadruple<S>& p) {
  if (p.parity() != Parity::Odd) throw ContractViolation("criterion_O needs an odd quadruple");
  std::vector<Condition> out;
  for (int i = 2; i <= p.d(); i += 2)
    out.push_back({"q^" + std::to_string(i) + " != 1", !(scalar_pow(p.q(), i) == S(1))});
  for (auto& c : op_conditions(p)) out.push_back(std::move(c));
  return out;
}

template <ScalarField S>
bool criterion_E(const ParamQuadruple<S>& p) {
  return all_hold(criterion_E_conditions(p));
}

template <ScalarField S>
bool criterion_O(const ParamQuadruple<S>& p) {
  return all_hold(criterion_O_conditions(p));
}

template <ScalarField S>
bool criterion(const ParamQuadruple<S>& p) {
  return p.parity() == Parity::Even ? criterion_E(p) : criterion_O(p);
}

template <ScalarField S>
std::size_t closure_dimension(const ModuleRep<S>& m) {
  return span_closure(std::span<const Matrix<S>>(m.t.data(), m.t.size()));
}

// Absolute irreducibility: the generated matrix algebra is everything.
template <ScalarField S>
bool burnside_irreducible(const ModuleRep<S>& m) {
  return closure_dimension(m) == m.dim * m.dim;
}

// ---------------------------------------------------------------------------
// L-matrices

enum class LRoute { Operator, Recurrence, Closed };

inline const char* route_name(LRoute r) {
  switch (r) {
    case LRoute::Operator: return "operator";
    case LRoute::Recurrence: return "recurrence";
    case LRoute::Closed: return "closed";
  }
  return "?";
}

template <ScalarField S>
struct LMatrix {
  int d = 0;
  Matrix<S> entries;
  LRoute route = LRoute::Operator;
};

namespace detail {

// prod_{h=a}^{b} f(h); empty when a > b.
template <ScalarField S>
S prod_range(int a, int b, const std::function<S(int)>& f) {
  S r(1);
  for (int h = a; h <= b; ++h) r *= f(h);
  return r;
}

// First row of R S_i, after checking the remaining rows vanish.
template <ScalarField S>
Matrix<S> read_v0_coefficients(const std::vector<Matrix<S>>& rs, std::size_t n) {
  Matrix<S> l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 1; r < n; ++r)
        if (!rs[i](r, j).is_zero()) throw InternalError("R S_i v_j is not a multiple of v0");
      l(i, j) = rs[i](0, j);
    }
  return l;
}

template <ScalarField S>
Matrix<S> l_operator_E(const ParamQuadruple<S>& p) {
  const auto m = make_E(p);
  const int d = p.d();
  const std::size_t n = p.dim();
  const S& q = p.q();
  const auto id = Matrix<S>::identity(n);
  Matrix<S> r = id;
  for (int h = 1; h <= d; ++h)
    r = r * (id - m.X_pow(sign_pow(h - 1)) * (p.k(0) * p.k(3) * scalar_pow(q, 2 * ceil_half(h))));
  std::vector<Matrix<S>> rs;
  for (int i = 0; i <= d; ++i) {
    Matrix<S> s = id;
    for (int h = 1; h <= d - i; ++h)
      s = s * (id - m.Y_pow(sign_pow(h)) *
                        (p.k(0) * p.k(1).inverse() * scalar_pow(q, 2 * ceil_half(h - 1))));
    rs.push_back(r * s);
  }
  return read_v0_coefficients(rs, n);
}

template <ScalarField S>
Matrix<S> l_recurrence_E(const ParamQuadruple<S>& p) {
  const int d = p.d();
  const S& q = p.q();
  const S k1sq = p.k(1) * p.k(1);
  const S k3sq = p.k(3) * p.k(3);
  auto qp = [&](int e) { return scalar_pow(q, e); };
  Matrix<S> l(p.dim(), p.dim());
  auto at = [&](int i, int j) -> S& { return l(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  for (int i = 0; i <= d; ++i)
    at(i, 0) = prod_range<S>(1, i / 2, [&](int h) { return S(1) - qp(d - 2 * h + 1); }) *
               prod_range<S>(1, ceil_half(i), [&](int h) { return S(1) - k3sq * qp(2 - 2 * h); }) *
               prod_range<S>(1, d - i, [&](int h) { return eval_sequence(SequenceKind::Phi, p, h); });
  for (int j = 1; j <= d; ++j)
    for (int i = j; i <= d; ++i) {
      if ((i - j) % 2 == 0)
        at(i, j) = k1sq * qp(i + j - d - 1) * (at(i - 1, j - 1) - at(i, j - 1)) + at(i, j - 1);
      else
        at(i, j) = (S(1) - qp(j - i - 1)) * at(i, j - 1) + at(i - 1, j) - at(i - 1, j - 1);
    }
  return l;
}

template <ScalarField S>
Matrix<S> l_closed_E(const ParamQuadruple<S>& p) {
  const int d = p.d();
  const S& q = p.q();
  const S k3sq = p.k(3) * p.k(3);
  auto qp = [&](int e) { return scalar_pow(q, e); };
  auto rho = [&](int i) { return eval_sequence(SequenceKind::Rho, p, i); };
  auto k3_factor = [&](int h) { return S(1) - k3sq * qp(2 - 2 * h); };
  Matrix<S> l(p.dim(), p.dim());
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= i; ++j) {
      const int fi = i / 2, fj = j / 2;
      S v = qp(fj * (d - 4 * fi + 2 * fj - 1)) *
            prod_range<S>(1, (i - j) / 2, [&](int h) { return S(1) - qp(d - 2 * h + 1); }) *
            prod_range<S>(1, d - i, [&](int h) { return eval_sequence(SequenceKind::Phi, p, h); }) *
            prod_range<S>(1, ceil_half(j), [&](int h) { return rho(2 * h - 1); }) *
            prod_range<S>(1, fj, [&](int h) { return rho(2 * (fi - h + 1)); });
      if (i % 2 == 1 || j % 2 == 0)
        v *= prod_range<S>(1, ceil_half(i - j), k3_factor);
      else
        v *= qp(d - 2 * i + 2 * j - 1) * rho(i - j + 1) * prod_range<S>(1, (i - j) / 2, k3_factor);
      l(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    }
  return l;
}

template <ScalarField S>
Matrix<S> l_operator_O(const ParamQuadruple<S>& p) {
  const auto m = make_O(p);
  const int d = p.d();
  const std::size_t n = p.dim();
  const S& q = p.q();
  const auto id = Matrix<S>::identity(n);
  const S a = (p.k(0) * p.k(3)).inverse();
  const S b = (p.k(2) * p.k(3)).inverse();
  Matrix<S> r = id;
  for (int h = 1; h <= d; ++h) r = r * (id - m.X_pow(sign_pow(h)) * (a * scalar_pow(q, -2 * ceil_half(h))));
  std::vector<Matrix<S>> rs;
  for (int i = 0; i <= d; ++i) {
    Matrix<S> s = id;
    for (int h = 1; h <= d - i; ++h)
      s = s * (id - m.Y_pow(sign_pow(h)) * (b * scalar_pow(q, 1 - 2 * ceil_half(h))));
    rs.push_back(r * s);
  }
  return read_v0_coefficients(rs, n);
}

template <ScalarField S>
std::vector<S> l_initial_O(const ParamQuadruple<S>& p) {
  const int d = p.d();
  const S& q = p.q();
  const S k12 = p.k(1) * p.k(1) * p.k(2) * p.k(2);
  auto qp = [&](int e) { return scalar_pow(q, e); };
  std::vector<S> out;
  for (int i = 0; i <= d; ++i)
    out.push_back(prod_range<S>(0, floor_half(i - 1), [&](int h) { return S(1) - qp(2 * h - d); }) *
                  prod_range<S>(1, i / 2, [&](int h) { return S(1) - k12 * qp(d + 2 * h); }) *
                  prod_range<S>(1, d - i, [&](int h) {
                    return eval_sequence(SequenceKind::Psi, p, d - h + 1);
                  }));
  return out;
}

template <ScalarField S>
Matrix<S> l_recurrence_O(const ParamQuadruple<S>& p, const std::vector<S>& init) {
  const int d = p.d();
  const S& q = p.q();
  const S k01 = p.k(0) * p.k(0) * p.k(1) * p.k(1);
  auto qp = [&](int e) { return scalar_pow(q, e); };
  Matrix<S> l(p.dim(), p.dim());
  auto at = [&](int i, int j) -> S& { return l(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  for (int i = 0; i <= d; ++i) at(i, 0) = init[static_cast<std::size_t>(i)];
  for (int j = 1; j <= d; ++j)
    for (int i = j; i <= d; ++i) {
      if ((i - j) % 2 == 0)
        at(i, j) = (S(1) - k01 * qp(i + j)) * at(i, j - 1) + at(i - 1, j) - at(i - 1, j - 1);
      else
        at(i, j) = qp(j - i - 1) * (at(i - 1, j - 1) - at(i, j - 1)) + at(i, j - 1);
    }
  return l;
}

template <ScalarField S>
Matrix<S> l_closed_O(const ParamQuadruple<S>& p) {
  const int d = p.d();
  const S& q = p.q();
  const S k0sq = p.k(0) * p.k(0);
  const S k3sq = p.k(3) * p.k(3);
  const S k12 = p.k(1) * p.k(1) * p.k(2) * p.k(2);
  auto qp = [&](int e) { return scalar_pow(q, e); };
  auto rho = [&](int h) { return eval_sequence(SequenceKind::Rho, p, h); };
  Matrix<S> l(p.dim(), p.dim());
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= i; ++j) {
      const int cj = ceil_half(j);
      S v = scalar_pow(-(qp(d + i - cj) * k12), cj) *
            prod_range<S>(1, j / 2, [&](int h) { return (S(1) - qp(2 * h)).inverse(); }) *
            prod_range<S>(cj, floor_half(i - 1), [&](int h) { return S(1) - qp(2 * h - d); }) *
            prod_range<S>(1, i / 2 - cj, [&](int h) { return S(1) - k12 * qp(d + 2 * h); }) *
            prod_range<S>(1, j, rho) *
            prod_range<S>(1, d - i, [&](int h) { return eval_sequence(SequenceKind::Psi, p, d - h + 1); });
      auto tail = [&](int h) { return S(1) - qp(2 * h - i - 1); };
      if (i % 2 == 1 && j % 2 == 1 && i > j)
        v *= (qp(j - d - 1) * k3sq.inverse() - k0sq * qp(j + 1) - qp(j - i) + S(1)) *
             prod_range<S>(1, (j - 1) / 2, tail);
      else if (i % 2 == 1 && j % 2 == 1)
        v *= -(k0sq * qp(i + 1)) * prod_range<S>(1, (i - 1) / 2, tail);
      else if (i % 2 == 1)
        v *= prod_range<S>(1, j / 2, tail);
      else
        v *= prod_range<S>(1, cj, [&](int h) { return q - qp(2 * h - i - 1); });
      l(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    }
  return l;
}

}  // namespace detail

template <ScalarField S>
LMatrix<S> l_matrix_E(const ParamQuadruple<S>& p, LRoute route) {
  if (p.parity() != Parity::Even) throw ContractViolation("l_matrix_E needs an even quadruple");
  switch (route) {
    case LRoute::Operator: return {p.d(), detail::l_operator_E(p), route};
    case LRoute::Recurrence: return {p.d(), detail::l_recurrence_E(p), route};
    case LRoute::Closed: return {p.d(), detail::l_closed_E(p), route};
  }
  throw InternalError("unknown route");
}

// The recurrence is seeded with the closed initial values when the
// irreducibility conditions hold, and with the operator column otherwise;
// the closed form is only offered when they hold.
template <ScalarField S>
LMatrix<S> l_matrix_O(const ParamQuadruple<S>& p, LRoute route) {
  if (p.parity() != Parity::Odd) throw ContractViolation("l_matrix_O needs an odd quadruple");
  const bool ok = criterion_O(p);
  switch (route) {
    case LRoute::Operator: return {p.d(), detail::l_operator_O(p), route};
    case LRoute::Recurrence: {
      std::vector<S> init;
      if (ok) {
        init = detail::l_initial_O(p);
      } else {
        const auto op = detail::l_operator_O(p);
        for (std::size_t i = 0; i < p.dim(); ++i) init.push_back(op(i, 0));
      }
      return {p.d(), detail::l_recurrence_O(p, init), route};
    }
    case LRoute::Closed:
      if (!ok) throw ContractViolation("closed-form L-matrix needs the odd irreducibility conditions");
      return {p.d(), detail::l_closed_O(p), route};
  }
  throw InternalError("unknown route");
}

template <ScalarField S>
LMatrix<S> l_matrix(const ParamQuadruple<S>& p, LRoute route) {
  return p.parity() == Parity::Even ? l_matrix_E(p, route) : l_matrix_O(p, route);
}

template <ScalarField S>
std::vector<LRoute> available_routes(const ParamQuadruple<S>& p) {
  if (p.parity() == Parity::Odd && !criterion_O(p)) return {LRoute::Operator, LRoute::Recurrence};
  return {LRoute::Operator, LRoute::Recurrence, LRoute::Closed};
}

// Every available route; disagreement is an internal error.
template <ScalarField S>
std::vector<LMatrix<S>> l_matrix_all_routes(const ParamQuadruple<S>& p) {
  std::vector<LMatrix<S>> out;
  for (auto r : available_routes(p)) {
    out.push_back(l_matrix(p, r));
    if (!(out.back().entries == out.front().entries))
      throw InternalError(std::string("L-matrix routes disagree: ") + route_name(out.front().route) +
                          " vs " + route_name(r));
  }
  return out;
}

// Diagonal entries as displayed in the irreducibility proofs.
template <ScalarField S>
std::vector<S> l_diagonal_formula(const ParamQuadruple<S>& p) {
  using detail::prod_range;
  const int d = p.d();
  const S& q = p.q();
  auto qp = [&](int e) { return scalar_pow(q, e); };
  auto rho = [&](int h) { return eval_sequence(SequenceKind::Rho, p, h); };
  std::vector<S> out;
  for (int i = 0; i <= d; ++i) {
    const int fi = i / 2;
    if (p.parity() == Parity::Even) {
      out.push_back(qp(fi * (d - 2 * fi - 1)) *
                    prod_range<S>(1, d - i, [&](int h) { return eval_sequence(SequenceKind::Phi, p, h); }) *
                    prod_range<S>(1, ceil_half(i), [&](int h) { return rho(2 * h - 1); }) *
                    prod_range<S>(1, fi, [&](int h) { return rho(2 * (fi - h + 1)); }));
    } else {
      const S k12 = p.k(1) * p.k(1) * p.k(2) * p.k(2);
      S v = scalar_pow(-(qp(d + fi) * k12), ceil_half(i)) *
            prod_range<S>(1, fi, [&](int h) { return (S(1) - qp(2 * h)).inverse(); }) *
            prod_range<S>(1, i, rho) *
            prod_range<S>(1, d - i, [&](int h) { return eval_sequence(SequenceKind::Psi, p, d - h + 1); });
      if (i % 2 == 1)
        v *= -(p.k(0) * p.k(0) * qp(i + 1)) *
             prod_range<S>(1, (i - 1) / 2, [&](int h) { return S(1) - qp(2 * h - i - 1); });
      else
        v *= prod_range<S>(1, fi, [&](int h) { return q - qp(2 * h - i - 1); });
      out.push_back(v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Twisting, intertwiners, classification

// In the twisted module t_i acts as t_{i+e} did in the original.
template <ScalarField S>
ModuleRep<S> twist(const ModuleRep<S>& m, TwistElement e) {
  ModuleRep<S> out = m;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t src = (i + static_cast<std::size_t>(e.value)) % 4;
    out.t[i] = m.t[src];
    out.tinv[i] = m.tinv[src];
  }
  out.twist = m.twist + e;
  if (!verify_relations(out).all_pass() && verify_relations(m).all_pass())
    throw InternalError("twisting broke a defining relation");
  return out;
}

template <ScalarField S>
std::array<S, 4> det_fingerprint(const ModuleRep<S>& m) {
  return {det(m.t[0]), det(m.t[1]), det(m.t[2]), det(m.t[3])};
}

enum class IntertwinerStatus { Found, None, Indeterminate };

template <ScalarField S>
struct IntertwinerResult {
  IntertwinerStatus status = IntertwinerStatus::None;
  std::optional<Matrix<S>> matrix;
  std::size_t solution_dim = 0;
};

// Searches for an invertible T with T a(t_i) = b(t_i) T for all i.
template <ScalarField S>
IntertwinerResult<S> find_intertwiner(const ModuleRep<S>& a, const ModuleRep<S>& b) {
  IntertwinerResult<S> r;
  if (a.dim != b.dim) return r;
  std::vector<std::pair<Matrix<S>, Matrix<S>>> pairs;
  for (std::size_t i = 0; i < 4; ++i) pairs.emplace_back(a.t[i], b.t[i]);
  const auto space = solve_sylvester_homogeneous<S>(pairs);
  r.solution_dim = space.dim();
  if (space.dim() == 0) return r;
  const std::size_t n = a.dim;
  auto try_vec = [&](const Vec<S>& v) {
    auto t = reshape(v, n, n);
    if (det(t).is_zero()) return false;
    r.status = IntertwinerStatus::Found;
    r.matrix = std::move(t);
    return true;
  };
  for (const auto& v : space.basis)
    if (try_vec(v)) return r;
  if (space.dim() == 1) return r;
  for (int round = 1; round <= 32; ++round) {
    Vec<S> v(n * n);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      const S c(static_cast<long>(1 + (static_cast<std::size_t>(round) * (2 * j + 1) + j * j) % 7));
      for (std::size_t x = 0; x < v.size(); ++x) v[x] += c * space.basis[j][x];
    }
    if (try_vec(v)) return r;
  }
  r.status = IntertwinerStatus::Indeterminate;
  return r;
}

template <ScalarField S>
struct ClassificationResult {
  TwistElement twist;
  ParamQuadruple<S> params;
  Parity parity = Parity::Even;
  Matrix<S> certificate;
};

// Recovers (twist, canonical parameters) of an irreducible module satisfying
// the defining relations, and certifies the answer with an intertwiner.
template <ScalarField S>
ClassificationResult<S> classify(const ModuleRep<S>& m) {
  if (m.dim == 0) throw ContractViolation("empty module");
  if (!verify_relations(m).all_pass()) throw ContractViolation("module fails the defining relations");
  if (!burnside_irreducible(m)) throw ContractViolation("module is reducible");
  const auto prod = (m.t[0] * m.t[1] * m.t[2] * m.t[3]).scalar_value();
  if (!prod || prod->is_zero()) throw ClassificationError("t0 t1 t2 t3 is not a nonzero scalar");
  const S q = prod->inverse();
  const int d = static_cast<int>(m.dim) - 1;
  const auto fp = det_fingerprint(m);

  auto certify = [&](const ModuleRep<S>& ref, TwistElement e, const ParamQuadruple<S>& p) {
    auto it = find_intertwiner(m, ref);
    if (it.status != IntertwinerStatus::Found)
      throw ClassificationError("no isomorphism to the reconstructed module");
    return ClassificationResult<S>{e, p, p.parity(), std::move(*it.matrix)};
  };
  auto make_params = [&](std::array<S, 4> k, Parity parity) {
    try {
      return ParamQuadruple<S>::make(q, std::move(k), d, parity);
    } catch (const ContractViolation& ex) {
      throw ClassificationError(std::string("recovered parameters are invalid: ") + ex.what());
    }
  };

  if (m.dim % 2 == 1) return certify(make_O(make_params(fp, Parity::Odd)), TwistElement(0), make_params(fp, Parity::Odd));

  const S target = scalar_pow(q, -(d + 1));
  int pos = -1;
  for (int i = 0; i < 4; ++i)
    if (fp[static_cast<std::size_t>(i)] == target) {
      if (pos >= 0) throw ClassificationError("twist is ambiguous from the determinants");
      pos = i;
    }
  if (pos < 0) throw ClassificationError("no determinant equals q^{-d-1}");
  const TwistElement e(4 - pos);
  ModuleRep<S> base = m;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t src = (i + static_cast<std::size_t>(pos)) % 4;
    base.t[i] = m.t[src];
    base.tinv[i] = m.tinv[src];
  }
  const auto c = central_character(base);
  std::array<S, 4> k;
  const S r = scalar_pow(q, -(d + 1) / 2);
  if (r + r.inverse() == c[0])
    k[0] = r;
  else if (-(r + r.inverse()) == c[0])
    k[0] = -r;
  else
    throw ClassificationError("c0 is incompatible with k0^2 = q^{-d-1}");
  for (std::size_t i = 1; i < 4; ++i) {
    const auto roots = reciprocal_pair_from_sum(c[i]);
    if (!roots) throw ClassificationError("k" + std::to_string(i) + " does not lie in the base field");
    k[i] = roots->first;
  }
  const auto canon = canonical_orbit_rep(make_params(k, Parity::Even));
  return certify(twist(make_E(canon), e), e, canon);
}

// A common eigenvector of t_i and t_j, if one exists; eigenvalues are the
// roots of x^2 - c x + 1 for the central scalars c.
template <ScalarField S>
std::optional<Vec<S>> simultaneous_eigenvector(const ModuleRep<S>& m, std::size_t i, std::size_t j) {
  if (i > 3 || j > 3) throw ContractViolation("generator index out of range");
  const auto c = central_character(m);
  const auto li = reciprocal_pair_from_sum(c[i]);
  const auto lj = reciprocal_pair_from_sum(c[j]);
  if (!li || !lj) return std::nullopt;
  const std::size_t n = m.dim;
  const auto id = Matrix<S>::identity(n);
  for (const S& a : {li->first, li->second})
    for (const S& b : {lj->first, lj->second}) {
      const auto ma = m.t[i] - id * a;
      const auto mb = m.t[j] - id * b;
      Matrix<S> stacked(2 * n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) {
          stacked(r, col) = ma(r, col);
          stacked(n + r, col) = mb(r, col);
        }
      const auto ker = kernel(stacked);
      if (ker.dim() > 0) return ker.basis.front();
    }
  return std::nullopt;
}

}  // namespace dahamod
