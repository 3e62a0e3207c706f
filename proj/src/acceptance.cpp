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
#include "dahamod/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dahamod/analysis.hpp"
#include "dahamod/laurent.hpp"
#include "dahamod/modrep.hpp"
#include "dahamod/sampling.hpp"
#include "dahamod/verma.hpp"

namespace dahamod {

namespace {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }

  // Runs body, counting an escaped exception as one failed check.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }

  CriterionResult result(int id, std::string name) const {
    CriterionResult r{id, std::move(name), failures_ == 0 && checks_ > 0, checks_, failures_, first_};
    if (checks_ == 0) r.detail = "no checks ran";
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

constexpr std::uint64_t kMix = 0x9E3779B97F4A7C15ULL;

template <ScalarField S>
std::string describe(const ParamQuadruple<S>& p) {
  std::string s = std::string(parity_name(p.parity())) + " d=" + std::to_string(p.d()) + " q=" + p.q().str() + " k=(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + p.k(i).str();
  return s + ")";
}

template <ScalarField S>
ParamQuadruple<S> with_k(const ParamQuadruple<S>& p, std::array<S, 4> k) {
  return ParamQuadruple<S>::make(p.q(), std::move(k), p.d(), p.parity());
}

// Parameter sets used when no random grid is requested.
std::vector<ParamQuadruple<Rational>> fixed_rational(Parity parity) {
  using R = Rational;
  using P = ParamQuadruple<R>;
  const R q(2);
  std::vector<P> out;
  if (parity == Parity::Even) {
    out.push_back(P::make(q, {R(1, 2), R(1), R(3), R(1)}, 1, parity));
    out.push_back(P::make(q, {R(1, 2), R(1), R(1), R(1)}, 1, parity));
    out.push_back(P::make(q, {R(-1, 2), R(2), R(3, 5), R(-4)}, 1, parity));
    out.push_back(P::make(q, {R(1, 4), R(3), R(5), R(7)}, 3, parity));
    out.push_back(P::make(q, {R(-1, 8), R(2, 3), R(5), R(3)}, 5, parity));
    out.push_back(P::make(q, {R(1, 16), R(5, 7), R(-3), R(11, 2)}, 7, parity));
  } else {
    auto odd = [&](R k0, R k1, R k2, int d) {
      out.push_back(P::make(q, {k0, k1, k2, scalar_pow(q, -d - 1) / (k0 * k1 * k2)}, d, parity));
    };
    odd(R(1), R(1), R(1), 0);
    odd(R(1), R(1), R(3), 2);
    odd(R(1), R(1), R(1, 2), 2);
    odd(R(3), R(5), R(7), 4);
    odd(R(-2, 3), R(5), R(7, 4), 6);
  }
  return out;
}

struct Plan {
  AcceptanceOptions opt;

  bool structural() const { return opt.grid == 0; }
  std::size_t count(std::size_t full) const {
    return opt.grid < 0 ? full : static_cast<std::size_t>(opt.grid);
  }
  std::size_t small(std::size_t full) const {
    return opt.grid < 0 ? full : std::min(full, static_cast<std::size_t>(opt.grid));
  }
};

template <ScalarField S>
std::vector<ParamQuadruple<S>> draw(Sampler& s, const S& q, Parity parity, const std::vector<int>& ds,
                                    std::size_t n) {
  std::vector<ParamQuadruple<S>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.any(q, ds[i % ds.size()], parity));
  return out;
}

template <ScalarField S>
std::vector<ParamQuadruple<S>> draw_irreducible(Sampler& s, const S& q, Parity parity,
                                                const std::vector<int>& ds, std::size_t n) {
  std::vector<ParamQuadruple<S>> out;
  for (std::size_t i = 0; i < n; ++i)
    if (auto p = s.irreducible(q, ds[i % ds.size()], parity)) out.push_back(*p);
  return out;
}

std::vector<int> even_ds(int max_d) {
  std::vector<int> v;
  for (int d = 1; d <= max_d; d += 2) v.push_back(d);
  return v;
}

std::vector<int> odd_ds(int max_d) {
  std::vector<int> v;
  for (int d = 0; d <= max_d; d += 2) v.push_back(d);
  return v;
}

std::vector<ParamQuadruple<Rational>> module_params(const Plan& plan, Parity parity, int max_d,
                                                    std::size_t full, std::uint64_t salt) {
  if (plan.structural()) {
    auto all = fixed_rational(parity);
    std::erase_if(all, [&](const auto& p) { return p.d() > max_d; });
    return all;
  }
  Sampler s(plan.opt.seed ^ (salt * kMix));
  return draw(s, Rational(2), parity, parity == Parity::Even ? even_ds(max_d) : odd_ds(max_d),
              plan.count(full));
}

std::vector<ParamQuadruple<Rational>> irreducible_params(const Plan& plan, Parity parity, int max_d,
                                                         std::size_t full, std::uint64_t salt) {
  if (plan.structural()) {
    auto all = fixed_rational(parity);
    std::erase_if(all, [&](const auto& p) { return p.d() > max_d || !criterion(p); });
    return all;
  }
  Sampler s(plan.opt.seed ^ (salt * kMix));
  return draw_irreducible(s, Rational(2), parity,
                          parity == Parity::Even ? even_ds(max_d) : odd_ds(max_d), plan.count(full));
}

// ---------------------------------------------------------------------------
// Suites shared between the two backends

template <ScalarField S>
void relations_suite(Tally& t, const std::vector<ParamQuadruple<S>>& ps) {
  for (const auto& p : ps)
    t.guard(describe(p), [&] {
      const auto m = make_module(p);
      t.check(m.dim == p.dim(), "dimension of " + describe(p));
      t.check(verify_relations(m).all_pass(), "relations of " + describe(p));
    });
}

template <ScalarField S>
void character_suite(Tally& t, const std::vector<ParamQuadruple<S>>& ps) {
  for (const auto& p : ps)
    t.guard(describe(p), [&] {
      const auto m = make_module(p);
      std::array<S, 4> fp_expected;
      if (p.parity() == Parity::Even)
        fp_expected = {scalar_pow(p.q(), -p.d() - 1), S(1), S(1), S(1)};
      else
        fp_expected = p.k();
      const auto ch = central_character(m);
      const auto fp = det_fingerprint(m);
      std::array<S, 4> ch_expected;
      for (std::size_t i = 0; i < 4; ++i) ch_expected[i] = p.k(i) + p.k(i).inverse();
      t.check(ch == ch_expected, "central character of " + describe(p));
      t.check(fp == fp_expected, "determinants of " + describe(p));
      for (int e = 1; e < 4; ++e) {
        const auto tw = twist(m, TwistElement(e));
        const auto tch = central_character(tw);
        const auto tfp = det_fingerprint(tw);
        bool ok = tch == expected_central_character(tw);
        for (std::size_t i = 0; i < 4; ++i) {
          const std::size_t src = (i + static_cast<std::size_t>(e)) % 4;
          ok = ok && tch[i] == ch_expected[src] && tfp[i] == fp_expected[src];
        }
        t.check(ok, "twist " + std::to_string(e) + " permutation for " + describe(p));
      }
    });
}

// Identities that must hold on every finite module built from p.
template <ScalarField S>
void finite_identity_suite(Tally& t, const std::vector<ParamQuadruple<S>>& ps) {
  for (const auto& p : ps)
    t.guard(describe(p), [&] {
      const auto m = make_module(p);
      t.check(commutation_check(m).all_pass(), "commutation identities on " + describe(p));
      for (int e = 1; e < 4; ++e)
        t.check(commutation_check(twist(m, TwistElement(e))).all_pass(),
                "commutation identities on twist " + std::to_string(e) + " of " + describe(p));
      t.check(ladder_check(m, Ladder::X).all_pass(), "X ladder on " + describe(p));
      t.check(ladder_check(m, Ladder::Y).all_pass(), "Y ladder on " + describe(p));
      t.check(quotient_annihilates_v0(m), "quotient annihilation on " + describe(p));
      if (p.parity() == Parity::Even) t.check(w_ladder_check(m).all_pass(), "w ladder on " + describe(p));
      if (criterion(p)) {
        const bool found = simultaneous_eigenvector(m, 3, 0).has_value() ||
                           simultaneous_eigenvector(m, 1, 2).has_value();
        t.check(found, "simultaneous eigenvector on " + describe(p));
      }
    });
}

template <ScalarField S>
void universal_suite(Tally& t, const std::vector<HeckeParams<S>>& hs, int random_polys, Sampler& s) {
  for (const auto& h : hs) {
    const std::string tag = "q=" + h.q.str() + " k0=" + h.k[0].str();
    t.guard(tag, [&] {
      t.check(verma_ladder_check(h, 12).all_pass(), "universal ladder identities, " + tag);
      t.check(intertwining_check(h, 10).all_pass(), "polynomial intertwining, " + tag);
      for (int r = 0; r < random_polys; ++r) {
        LaurentPoly<S> f;
        for (int term = 0; term < 3; ++term)
          detail::add_to(f, static_cast<int>(s.index(7)) - 3, S(s.pool_value()));
        LaurentPoly<S> expected;
        for (const auto& [e, c] : f) expected[e + 1] = c * h.q.inverse();
        t.check(poly_apply(VermaGen::Y, f, h) == expected, "Y acts as q^-1 z, " + tag);
        const auto xf = poly_apply(VermaGen::X, f, h);
        t.check(poly_apply(VermaGen::XInv, xf, h) == f, "X^-1 X = 1 on P, " + tag);
      }
      // Inverse generators on the universal module against t^-1 = c - t.
      for (int i = 0; i <= 6; ++i) {
        const auto mi = basis_vector<S>(i);
        static const VermaGen gens[] = {VermaGen::T0, VermaGen::T1, VermaGen::T2, VermaGen::T3};
        static const VermaGen invs[] = {VermaGen::T0Inv, VermaGen::T1Inv, VermaGen::T2Inv, VermaGen::T3Inv};
        for (std::size_t g = 0; g < 4; ++g) {
          const S c = h.k[g] + h.k[g].inverse();
          const auto expected = sparse_axpy(sparse_axpy(SparseVec<S>{}, c, mi), S(-1), verma_apply(gens[g], mi, h));
          t.check(verma_apply(invs[g], mi, h) == expected, "inverse generator on m_i, " + tag);
        }
      }
    });
  }
}

// ---------------------------------------------------------------------------
// Criteria

CriterionResult criterion_relations(const Plan& plan) {
  Tally t;
  for (Parity par : {Parity::Even, Parity::Odd}) {
    const auto ps = module_params(plan, par, par == Parity::Even ? 7 : 6, 100, 1);
    if (plan.opt.grid < 0) t.check(ps.size() >= 100, "at least 100 samples per parity");
    relations_suite(t, ps);
  }
  return t.result(1, "defining relations on constructed modules");
}

CriterionResult criterion_characters(const Plan& plan) {
  Tally t;
  for (Parity par : {Parity::Even, Parity::Odd})
    character_suite(t, module_params(plan, par, par == Parity::Even ? 7 : 6, 100, 1));
  return t.result(2, "central characters and determinant fingerprints");
}

CriterionResult criterion_oracle(const Plan& plan) {
  Tally t;
  for (Parity par : {Parity::Even, Parity::Odd}) {
    const int max_d = par == Parity::Even ? 5 : 4;
    std::vector<ParamQuadruple<Rational>> ps;
    std::size_t adversarial = 0;
    if (plan.structural()) {
      ps = module_params(plan, par, max_d, 0, 3);
    } else {
      Sampler s(plan.opt.seed ^ (3 * kMix) ^ static_cast<std::uint64_t>(par));
      const auto ds = par == Parity::Even ? even_ds(max_d) : odd_ds(max_d);
      const std::size_t n = plan.count(200);
      const std::size_t n_adv = std::max<std::size_t>(n / 4, plan.opt.grid < 0 ? 20 : 1);
      for (std::size_t i = 0; ps.size() < n_adv && i < 4 * n_adv; ++i) {
        const int d = par == Parity::Even ? ds[i % ds.size()] : 2 + 2 * static_cast<int>(i % 2);
        if (auto p = s.adversarial(Rational(2), d, par)) ps.push_back(*p);
      }
      adversarial = ps.size();
      for (std::size_t i = ps.size(); i < n; ++i) ps.push_back(s.any(Rational(2), ds[i % ds.size()], par));
      if (plan.opt.grid < 0) {
        t.check(ps.size() >= 200, "at least 200 samples per parity");
        t.check(adversarial >= 20, "at least 20 adversarial samples per parity");
      }
    }
    std::size_t irreducible = 0, reducible = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const auto& p = ps[i];
      t.guard(describe(p), [&] {
        const bool crit = criterion(p);
        const bool burn = burnside_irreducible(make_module(p));
        (burn ? irreducible : reducible) += 1;
        t.check(crit == burn, "criterion vs closure for " + describe(p));
        if (i < adversarial) t.check(!crit, "adversarial sample breaks the criterion: " + describe(p));
      });
    }
    if (plan.opt.grid < 0 || plan.structural())
      t.check(irreducible > 0 && reducible > 0, "both verdicts occur");
  }
  return t.result(3, "closed-form criteria agree with the closure oracle");
}

CriterionResult criterion_lmatrix(const Plan& plan) {
  Tally t;
  for (Parity par : {Parity::Even, Parity::Odd}) {
    const int max_d = par == Parity::Even ? 5 : 4;
    std::vector<ParamQuadruple<Rational>> ps;
    if (plan.structural()) {
      ps = module_params(plan, par, max_d, 0, 4);
    } else {
      Sampler s(plan.opt.seed ^ (4 * kMix) ^ static_cast<std::uint64_t>(par));
      const auto ds = par == Parity::Even ? even_ds(max_d) : odd_ds(max_d);
      const std::size_t n = plan.count(20);
      for (std::size_t i = 0; i < n; ++i) {
        const int d = ds[i % ds.size()];
        std::optional<ParamQuadruple<Rational>> adv;
        if (i % 4 == 3) adv = s.adversarial(Rational(2), d, par);
        ps.push_back(adv ? *adv : s.any(Rational(2), d, par));
      }
      if (plan.opt.grid < 0) t.check(ps.size() >= 20, "at least 20 samples per parity");
    }
    for (const auto& p : ps)
      t.guard(describe(p), [&] {
        const auto ls = l_matrix_all_routes(p);
        t.check(ls.size() == available_routes(p).size(), "all routes computed for " + describe(p));
        const std::size_t n = p.dim();
        for (const auto& l : ls) {
          bool upper_zero = true;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) upper_zero = upper_zero && l.entries(i, j).is_zero();
          t.check(upper_zero, std::string("upper entries vanish, route ") + route_name(l.route) + ", " + describe(p));
        }
        bool diag_nonzero = true;
        for (std::size_t i = 0; i < n; ++i) diag_nonzero = diag_nonzero && !ls[0].entries(i, i).is_zero();
        t.check(diag_nonzero == criterion(p), "diagonal nonvanishing matches the criterion, " + describe(p));
        if (p.parity() == Parity::Even || criterion(p)) {
          const auto diag = l_diagonal_formula(p);
          bool same = true;
          for (std::size_t i = 0; i < n; ++i) same = same && diag[i] == ls[0].entries(i, i);
          t.check(same, "diagonal product formula, " + describe(p));
        }
      });
  }
  return t.result(4, "L-matrix routes agree");
}

template <ScalarField S>
bool intertwines(const ModuleRep<S>& a, const ModuleRep<S>& b, const IntertwinerResult<S>& r) {
  if (r.status != IntertwinerStatus::Found || !r.matrix) return false;
  const auto& tm = *r.matrix;
  if (det(tm).is_zero()) return false;
  for (std::size_t i = 0; i < 4; ++i)
    if (!(tm * a.t[i] == b.t[i] * tm)) return false;
  return true;
}

CriterionResult criterion_isomorphisms(const Plan& plan) {
  Tally t;
  {
    const auto ps = irreducible_params(plan, Parity::Even, 5, 20, 5);
    if (plan.opt.grid < 0) t.check(ps.size() >= 20, "at least 20 irreducible even samples");
    for (std::size_t s = 0; s < ps.size(); ++s) {
      const auto& p = ps[s];
      t.guard(describe(p), [&] {
        const auto m = make_E(p);
        for (std::size_t j = 1; j < 4; ++j) {
          auto k = p.k();
          k[j] = k[j].inverse();
          const auto other = make_E(with_k(p, k));
          t.check(intertwines(m, other, find_intertwiner(m, other)),
                  "k" + std::to_string(j) + " inversion isomorphism, " + describe(p));
        }
        t.check(intertwines(m, m, find_intertwiner(m, m)), "self isomorphism, " + describe(p));
        for (int e = 1; e < 4; ++e) {
          const auto tw = twist(m, TwistElement(e));
          t.check(det_fingerprint(tw) != det_fingerprint(m), "twist changes determinants, " + describe(p));
          t.check(find_intertwiner(m, tw).status == IntertwinerStatus::None,
                  "no isomorphism to twist " + std::to_string(e) + ", " + describe(p));
        }
        for (std::size_t o = s + 1; o < ps.size(); ++o) {
          const auto& p2 = ps[o];
          if (p2.d() != p.d() || canonical_orbit_rep(p2) == canonical_orbit_rep(p)) continue;
          t.check(find_intertwiner(m, make_E(p2)).status == IntertwinerStatus::None,
                  "distinct orbits are not isomorphic, " + describe(p) + " / " + describe(p2));
          break;
        }
      });
    }
  }
  {
    const auto ps = irreducible_params(plan, Parity::Odd, 4, 20, 6);
    if (plan.opt.grid < 0) t.check(ps.size() >= 20, "at least 20 irreducible odd samples");
    for (std::size_t s = 0; s < ps.size(); ++s) {
      const auto& p = ps[s];
      t.guard(describe(p), [&] {
        const auto m = make_O(p);
        const auto& k = p.k();
        for (int r = 1; r < 4; ++r) {
          std::array<Rational, 4> rot;
          for (std::size_t i = 0; i < 4; ++i) rot[i] = k[(i + static_cast<std::size_t>(r)) % 4];
          const auto other = twist(make_O(with_k(p, rot)), TwistElement(4 - r));
          t.check(intertwines(m, other, find_intertwiner(m, other)),
                  "rotation " + std::to_string(r) + " isomorphism, " + describe(p));
        }
        for (std::size_t o = s + 1; o < ps.size(); ++o) {
          const auto& p2 = ps[o];
          if (p2.d() != p.d()) continue;
          const auto m2 = make_O(p2);
          if (det_fingerprint(m2) == det_fingerprint(m)) continue;
          t.check(find_intertwiner(m, m2).status == IntertwinerStatus::None,
                  "determinant-distinct odd modules are not isomorphic, " + describe(p));
          break;
        }
      });
    }
  }
  return t.result(5, "isomorphism theorems realized by intertwiners");
}

ModuleRep<Rational> conjugate(const ModuleRep<Rational>& m, Sampler& s) {
  const std::size_t n = m.dim;
  Matrix<Rational> pm(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pm(i, j) = Rational(static_cast<long>(s.index(7)) - 3);
  } while (det(pm).is_zero());
  const auto pinv = inverse(pm);
  ModuleRep<Rational> out = m;
  for (std::size_t i = 0; i < 4; ++i) {
    out.t[i] = pm * m.t[i] * pinv;
    out.tinv[i] = pm * m.tinv[i] * pinv;
  }
  return out;
}

CriterionResult criterion_classify(const Plan& plan) {
  Tally t;
  Sampler s(plan.opt.seed ^ (6 * kMix));
  {
    const auto ps = irreducible_params(plan, Parity::Even, 5, 50, 7);
    if (plan.opt.grid < 0) t.check(ps.size() >= 50, "at least 50 irreducible even samples");
    for (std::size_t idx = 0; idx < ps.size(); ++idx) {
      const auto& p = ps[idx];
      const auto canon = canonical_orbit_rep(p);
      for (int e = 0; e < 4; ++e)
        t.guard(describe(p), [&] {
          auto m = twist(make_E(p), TwistElement(e));
          if (idx % 2 == 1) m = conjugate(m, s);
          const auto c = classify(m);
          t.check(c.twist.value == e && c.params == canon && c.parity == Parity::Even,
                  "even round trip at twist " + std::to_string(e) + ", " + describe(p));
          const auto ref = twist(make_E(canon), TwistElement(e));
          t.check(intertwines(m, ref, IntertwinerResult<Rational>{IntertwinerStatus::Found, c.certificate, 1}),
                  "certificate intertwines, " + describe(p));
        });
    }
  }
  {
    const auto ps = irreducible_params(plan, Parity::Odd, 4, 50, 8);
    if (plan.opt.grid < 0) t.check(ps.size() >= 50, "at least 50 irreducible odd samples");
    for (std::size_t idx = 0; idx < ps.size(); ++idx) {
      const auto& p = ps[idx];
      t.guard(describe(p), [&] {
        auto m = make_O(p);
        if (idx % 2 == 1) m = conjugate(m, s);
        const auto c = classify(m);
        t.check(c.twist.value == 0 && c.params == p && c.parity == Parity::Odd,
                "odd round trip, " + describe(p));
        t.check(intertwines(m, make_O(p), IntertwinerResult<Rational>{IntertwinerStatus::Found, c.certificate, 1}),
                "certificate intertwines, " + describe(p));
      });
    }
  }
  {
    using R = Rational;
    const auto reducible = make_E(ParamQuadruple<R>::make(R(2), {R(1, 2), R(1), R(1), R(1)}, 1, Parity::Even));
    bool rejected = false;
    try {
      classify(reducible);
    } catch (const ContractViolation&) {
      rejected = true;
    }
    t.check(rejected, "reducible module is rejected");
  }
  return t.result(6, "classification round trip");
}

CriterionResult criterion_universal(const Plan& plan) {
  Tally t;
  Sampler s(plan.opt.seed ^ (9 * kMix));
  std::vector<HeckeParams<Rational>> hs;
  hs.push_back({Rational(2), {Rational(1, 2), Rational(1), Rational(3), Rational(1)}});
  if (!plan.structural())
    for (std::size_t i = 0; i < plan.small(6); ++i) hs.push_back({Rational(2), s.free_k<Rational>()});
  universal_suite(t, hs, plan.structural() ? 3 : 20, s);
  for (Parity par : {Parity::Even, Parity::Odd})
    finite_identity_suite(t, module_params(plan, par, par == Parity::Even ? 7 : 6, 100, 1));
  return t.result(7, "universal module, polynomial representation and finite identities");
}

CriterionResult criterion_symbolic(const Plan& plan) {
  Tally t;
  Sampler s(plan.opt.seed ^ (10 * kMix));
  const RatFun q = RatFun::variable();
  std::vector<ParamQuadruple<RatFun>> ps;
  if (plan.structural()) {
    using F = RatFun;
    ps.push_back(ParamQuadruple<F>::make(q, {q.inverse(), F(1), F(3), F(1)}, 1, Parity::Even));
    ps.push_back(ParamQuadruple<F>::make(q, {F(1), F(1), F(1), q.inverse()}, 0, Parity::Odd));
    ps.push_back(ParamQuadruple<F>::make(q, {F(1), F(1), F(3), scalar_pow(q, -3) / F(3)}, 2, Parity::Odd));
  } else {
    const std::size_t n = plan.small(8);
    for (auto& p : draw(s, q, Parity::Even, even_ds(3), n)) ps.push_back(p);
    for (auto& p : draw(s, q, Parity::Odd, odd_ds(2), n)) ps.push_back(p);
  }
  relations_suite(t, ps);
  character_suite(t, ps);
  finite_identity_suite(t, ps);
  std::vector<HeckeParams<RatFun>> hs;
  hs.push_back(ps.front().hecke());
  if (!plan.structural()) hs.push_back({q, s.free_k<RatFun>()});
  universal_suite(t, hs, 3, s);
  return t.result(8, "symbolic q repeats relations, characters and identities");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const Plan plan{options};
  std::vector<CriterionResult> out;
  if (options.rational) {
    out.push_back(criterion_relations(plan));
    out.push_back(criterion_characters(plan));
    out.push_back(criterion_oracle(plan));
    out.push_back(criterion_lmatrix(plan));
    out.push_back(criterion_isomorphisms(plan));
    out.push_back(criterion_classify(plan));
    out.push_back(criterion_universal(plan));
  }
  if (options.ratfun) out.push_back(criterion_symbolic(plan));
  return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (checks "
       << r.checks << ", failures " << r.failures << ")";
    if (!r.pass && !r.detail.empty()) os << ": " << r.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace dahamod
