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
#include "dahamod/dahamod.h"

#include <cstring>
#include <string>
#include <variant>

#include "dahamod/acceptance.hpp"
#include "dahamod/analysis.hpp"
#include "dahamod/json_io.hpp"
#include "dahamod/sampling.hpp"

using namespace dahamod;

struct dahamod_module {
  std::variant<ModuleRep<Rational>, ModuleRep<RatFun>> rep;
};

namespace {

thread_local std::string g_last_error;

dahamod_status fail(dahamod_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
dahamod_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const ContractViolation& e) {
    return fail(DAHAMOD_E_CONSTRAINT, e.what());
  } catch (const ClassificationError& e) {
    return fail(DAHAMOD_E_CLASSIFY, e.what());
  } catch (const IoError& e) {
    return fail(DAHAMOD_E_IO, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(DAHAMOD_E_IO, std::string("malformed JSON: ") + e.what());
  } catch (const DomainError& e) {
    return fail(DAHAMOD_E_USAGE, e.what());
  } catch (const SingularMatrixError& e) {
    return fail(DAHAMOD_E_CONSTRAINT, e.what());
  } catch (const std::exception& e) {
    return fail(DAHAMOD_E_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  if (out) *out = copy_string(j.dump(2) + "\n");
}

template <ScalarField S>
ParamQuadruple<S> to_params(const dahamod_params& p) {
  if (!p.q) throw DomainError("q is missing");
  std::array<S, 4> k;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!p.k[i]) throw DomainError("k" + std::to_string(i) + " is missing");
    k[i] = S::parse(p.k[i]);
  }
  return ParamQuadruple<S>::make(S::parse(p.q), k, p.d,
                                 p.parity == DAHAMOD_PARITY_EVEN ? Parity::Even : Parity::Odd);
}

template <class F>
auto with_backend(dahamod_backend b, F&& f) {
  if (b == DAHAMOD_BACKEND_RATFUN) return f(RatFun());
  return f(Rational());
}

template <ScalarField S>
Json verify_report(const ModuleRep<S>& m, bool& all_pass) {
  const auto rel = verify_relations(m);
  Json out = to_json(rel);
  all_pass = rel.all_pass();
  if (!rel.all_pass()) return out;

  const auto ch = central_character(m);
  const auto expected = expected_central_character(m);
  Json chj = Json::array();
  for (const auto& c : ch) chj.push_back(c.str());
  out["central_character"] = chj;
  const bool char_ok = ch == expected;
  out["central_character_matches_params"] = char_ok;
  Json fp = Json::array();
  for (const auto& x : det_fingerprint(m)) fp.push_back(x.str());
  out["determinants"] = fp;
  const auto comm = commutation_check(m);
  out["commutation"] = to_json(comm);
  all_pass = all_pass && char_ok && comm.all_pass();
  if (m.twist.value == 0) {
    const auto lx = ladder_check(m, Ladder::X);
    const auto ly = ladder_check(m, Ladder::Y);
    const bool quot = quotient_annihilates_v0(m);
    out["ladder_X"] = to_json(lx);
    out["ladder_Y"] = to_json(ly);
    out["quotient_annihilates_v0"] = quot;
    all_pass = all_pass && lx.all_pass() && ly.all_pass() && quot;
    if (m.params.parity() == Parity::Even) {
      const auto w = w_ladder_check(m);
      out["w_ladder"] = to_json(w);
      all_pass = all_pass && w.all_pass();
    }
  }
  out["all_pass"] = all_pass;
  return out;
}

template <ScalarField S>
Json irreducible_report(const ModuleRep<S>& m) {
  const std::size_t cd = closure_dimension(m);
  const auto conds = m.params.parity() == Parity::Even ? criterion_E_conditions(m.params)
                                                       : criterion_O_conditions(m.params);
  return Json{{"dim", m.dim},
              {"closure_dimension", cd},
              {"irreducible", cd == m.dim * m.dim},
              {"criterion", all_hold(conds)},
              {"conditions", to_json(conds)}};
}

const char* status_name(IntertwinerStatus s) {
  switch (s) {
    case IntertwinerStatus::Found: return "found";
    case IntertwinerStatus::None: return "none";
    case IntertwinerStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

}  // namespace

extern "C" {

const char* dahamod_last_error(void) { return g_last_error.c_str(); }

void dahamod_string_free(char* s) { delete[] s; }

dahamod_status dahamod_construct(const dahamod_params* params, dahamod_module** out) {
  if (!params || !out) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    with_backend(params->backend, [&](auto tag) {
      using S = decltype(tag);
      *out = new dahamod_module{make_module(to_params<S>(*params))};
      return 0;
    });
    return DAHAMOD_OK;
  });
}

dahamod_status dahamod_module_from_json(const char* json, dahamod_module** out) {
  if (!json || !out) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    const Json j = Json::parse(json);
    if (!j.is_object() || !j.contains("params")) throw IoError("module JSON needs params");
    if (infer_backend(j["params"]) == Backend::RatFun)
      *out = new dahamod_module{module_from_json<RatFun>(j)};
    else
      *out = new dahamod_module{module_from_json<Rational>(j)};
    return DAHAMOD_OK;
  });
}

dahamod_status dahamod_module_to_json(const dahamod_module* m, char** out) {
  if (!m || !out) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    std::visit([&](const auto& rep) { emit(to_json(rep), out); }, m->rep);
    return DAHAMOD_OK;
  });
}

void dahamod_module_free(dahamod_module* m) { delete m; }

size_t dahamod_module_dim(const dahamod_module* m) {
  return m ? std::visit([](const auto& rep) { return rep.dim; }, m->rep) : 0;
}

int dahamod_module_twist(const dahamod_module* m) {
  return m ? std::visit([](const auto& rep) { return rep.twist.value; }, m->rep) : 0;
}

dahamod_backend dahamod_module_backend(const dahamod_module* m) {
  return m && m->rep.index() == 1 ? DAHAMOD_BACKEND_RATFUN : DAHAMOD_BACKEND_RATIONAL;
}

dahamod_status dahamod_twist(const dahamod_module* m, int e, dahamod_module** out) {
  if (!m || !out) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    std::visit([&](const auto& rep) { *out = new dahamod_module{twist(rep, TwistElement(e))}; }, m->rep);
    return DAHAMOD_OK;
  });
}

dahamod_status dahamod_verify(const dahamod_module* m, char** report) {
  if (!m) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    bool ok = false;
    std::visit([&](const auto& rep) { emit(verify_report(rep, ok), report); }, m->rep);
    return ok ? DAHAMOD_OK : fail(DAHAMOD_E_VERIFY, "module fails verification");
  });
}

dahamod_status dahamod_irreducible(const dahamod_module* m, int* irreducible, char** report) {
  if (!m) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    std::visit(
        [&](const auto& rep) {
          const Json r = irreducible_report(rep);
          if (irreducible) *irreducible = r["irreducible"].get<bool>() ? 1 : 0;
          emit(r, report);
        },
        m->rep);
    return DAHAMOD_OK;
  });
}

dahamod_status dahamod_classify(const dahamod_module* m, char** result) {
  if (!m) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    return std::visit(
        [&](const auto& rep) {
          if (!verify_relations(rep).all_pass())
            return fail(DAHAMOD_E_VERIFY, "module fails the defining relations");
          const std::size_t cd = closure_dimension(rep);
          if (cd != rep.dim * rep.dim) {
            emit(Json{{"verdict", "reducible"}, {"closure_dimension", cd}, {"dim", rep.dim}}, result);
            return fail(DAHAMOD_E_REDUCIBLE, "module is reducible (closure dimension " +
                                                 std::to_string(cd) + ")");
          }
          emit(to_json(classify(rep)), result);
          return DAHAMOD_OK;
        },
        m->rep);
  });
}

dahamod_status dahamod_intertwiner(const dahamod_module* a, const dahamod_module* b, char** result) {
  if (!a || !b) return fail(DAHAMOD_E_USAGE, "null argument");
  if (a->rep.index() != b->rep.index()) return fail(DAHAMOD_E_USAGE, "modules use different scalar backends");
  return guarded([&] {
    std::visit(
        [&](const auto& ra) {
          using M = std::decay_t<decltype(ra)>;
          const auto& rb = std::get<M>(b->rep);
          const auto r = find_intertwiner(ra, rb);
          Json j{{"status", status_name(r.status)}, {"solution_dimension", r.solution_dim}};
          if (r.matrix) j["matrix"] = to_json(*r.matrix);
          emit(j, result);
        },
        a->rep);
    return DAHAMOD_OK;
  });
}

dahamod_status dahamod_lmatrix(const dahamod_params* params, dahamod_route route, char** result) {
  if (!params) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    with_backend(params->backend, [&](auto tag) {
      using S = decltype(tag);
      const auto p = to_params<S>(*params);
      if (route == DAHAMOD_ROUTE_ALL) {
        Json routes = Json::array();
        for (const auto& l : l_matrix_all_routes(p)) routes.push_back(to_json(l));
        emit(Json{{"params", to_json(p)}, {"agree", true}, {"routes", routes}}, result);
      } else {
        const LRoute r = route == DAHAMOD_ROUTE_OPERATOR     ? LRoute::Operator
                         : route == DAHAMOD_ROUTE_RECURRENCE ? LRoute::Recurrence
                                                             : LRoute::Closed;
        emit(to_json(l_matrix(p, r)), result);
      }
      return 0;
    });
    return DAHAMOD_OK;
  });
}

dahamod_status dahamod_orbit(const dahamod_params* params, char** result) {
  if (!params) return fail(DAHAMOD_E_USAGE, "null argument");
  return guarded([&] {
    with_backend(params->backend, [&](auto tag) {
      using S = decltype(tag);
      const auto p = to_params<S>(*params);
      Json orbit = Json::array();
      for (const auto& s : SignTriple::all())
        orbit.push_back(Json{{"signs", s.s}, {"params", to_json(orbit_act(p, s))}});
      emit(Json{{"canonical", to_json(canonical_orbit_rep(p))}, {"orbit", orbit}}, result);
      return 0;
    });
    return DAHAMOD_OK;
  });
}

dahamod_status dahamod_sweep(uint64_t seed, int grid, char** result) {
  return guarded([&] {
    Sampler s(seed);
    const Rational q(2);
    const std::size_t n = grid < 0 ? 50 : static_cast<std::size_t>(grid);
    Json samples = Json::array();
    bool agree_all = true;
    for (Parity par : {Parity::Even, Parity::Odd}) {
      const std::vector<int> ds = par == Parity::Even ? std::vector<int>{1, 3, 5} : std::vector<int>{0, 2, 4};
      for (std::size_t i = 0; i < n; ++i) {
        const int d = ds[i % ds.size()];
        std::optional<ParamQuadruple<Rational>> p;
        if (i % 4 == 3) p = s.adversarial(q, d, par);
        if (!p) p = s.any(q, d, par);
        const auto m = make_module(*p);
        const std::size_t cd = closure_dimension(m);
        const bool crit = criterion(*p);
        const bool irr = cd == m.dim * m.dim;
        agree_all = agree_all && crit == irr;
        samples.push_back(Json{{"params", to_json(*p)},
                               {"criterion", crit},
                               {"closure_dimension", cd},
                               {"irreducible", irr},
                               {"agree", crit == irr}});
      }
    }
    emit(Json{{"seed", seed}, {"samples", samples}, {"agree_all", agree_all}}, result);
    return agree_all ? DAHAMOD_OK : fail(DAHAMOD_E_VERIFY, "criterion and closure disagree");
  });
}

dahamod_status dahamod_selftest(uint64_t seed, int grid, int backends, char** summary) {
  return guarded([&] {
    AcceptanceOptions opt;
    opt.seed = seed;
    opt.grid = grid;
    opt.rational = (backends & 1) != 0;
    opt.ratfun = (backends & 2) != 0;
    const auto results = run_acceptance(opt);
    if (summary) *summary = copy_string(format_results(results));
    for (const auto& r : results)
      if (!r.pass) return fail(DAHAMOD_E_SELFTEST, "criterion " + std::to_string(r.id) + " failed");
    return DAHAMOD_OK;
  });
}

}  // extern "C"
