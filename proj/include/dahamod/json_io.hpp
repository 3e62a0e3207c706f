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

#include <string>

#include "json.hpp"

#include "dahamod/analysis.hpp"
#include "dahamod/laurent.hpp"
#include "dahamod/modrep.hpp"

namespace dahamod {

using Json = nlohmann::ordered_json;

// Backend of a serialized module or parameter set, read off the q literal.
inline Backend infer_backend(const Json& params) {
  if (!params.is_object() || !params.contains("q") || !params["q"].is_string())
    throw IoError("params.q must be a string");
  return params["q"].get<std::string>().find('|') != std::string::npos ? Backend::RatFun
                                                                       : Backend::Rational;
}

namespace detail {

// Type errors inside a well-formed document surface as IoError.
template <class F>
auto json_guard(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(e.what());
  }
}

}  // namespace detail

template <ScalarField S>
Json scalar_to_json(const S& x) {
  return x.str();
}

template <ScalarField S>
S scalar_from_json(const Json& j) {
  if (!j.is_string()) throw IoError("scalar must be an exact string");
  try {
    return S::parse(j.get<std::string>());
  } catch (const DomainError& e) {
    throw IoError(e.what());
  }
}

template <ScalarField S>
Json vec_to_json(const Vec<S>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

template <ScalarField S>
Json to_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <ScalarField S>
Matrix<S> matrix_from_json(const Json& j) {
  return detail::json_guard([&] {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
      throw IoError("matrix needs rows, cols and entries");
    const auto r = j["rows"].get<std::size_t>();
    const auto c = j["cols"].get<std::size_t>();
    const auto& e = j["entries"];
    if (!e.is_array() || e.size() != r) throw IoError("matrix row count mismatch");
    Matrix<S> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (!e[i].is_array() || e[i].size() != c) throw IoError("matrix column count mismatch");
      for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json<S>(e[i][k]);
    }
    return m;
  });
}

template <ScalarField S>
Json to_json(const ParamQuadruple<S>& p) {
  Json k = Json::array();
  for (const auto& x : p.k()) k.push_back(x.str());
  return Json{{"q", p.q().str()}, {"k", std::move(k)}, {"d", p.d()}, {"parity", parity_name(p.parity())}};
}

inline Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw IoError("parity must be \"even\" or \"odd\"");
}

// Constraint violations propagate as ContractViolation; malformed input as IoError.
template <ScalarField S>
ParamQuadruple<S> params_from_json(const Json& j) {
  return detail::json_guard([&] {
    if (!j.is_object()) throw IoError("params must be an object");
    for (const char* key : {"q", "k", "d", "parity"})
      if (!j.contains(key)) throw IoError(std::string("params missing '") + key + "'");
    const auto& k = j["k"];
    if (!k.is_array() || k.size() != 4) throw IoError("params.k must hold four scalars");
    std::array<S, 4> ks;
    for (std::size_t i = 0; i < 4; ++i) ks[i] = scalar_from_json<S>(k[i]);
    if (!j["d"].is_number_integer()) throw IoError("params.d must be an integer");
    return ParamQuadruple<S>::make(scalar_from_json<S>(j["q"]), ks, j["d"].get<int>(),
                                   parity_from_string(j["parity"].get<std::string>()));
  });
}

template <ScalarField S>
Json to_json(const ModuleRep<S>& m) {
  Json t = Json::array(), tinv = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    t.push_back(to_json(m.t[i]));
    tinv.push_back(to_json(m.tinv[i]));
  }
  return Json{{"dim", m.dim},     {"params", to_json(m.params)}, {"twist", m.twist.value},
              {"t", std::move(t)}, {"tinv", std::move(tinv)},     {"label", m.label}};
}

// Matrices are loaded as given; relation checks are left to the caller.
template <ScalarField S>
ModuleRep<S> module_from_json(const Json& j) {
  return detail::json_guard([&] {
    if (!j.is_object()) throw IoError("module must be an object");
    for (const char* key : {"dim", "params", "twist", "t", "tinv"})
      if (!j.contains(key)) throw IoError(std::string("module missing '") + key + "'");
    ModuleRep<S> m{j["dim"].get<std::size_t>(), {}, {}, params_from_json<S>(j["params"]),
                   TwistElement(j["twist"].get<int>()), j.value("label", std::string())};
    if (m.dim != m.params.dim()) throw IoError("module dim does not match params.d + 1");
    if (!j["t"].is_array() || j["t"].size() != 4 || !j["tinv"].is_array() || j["tinv"].size() != 4)
      throw IoError("module needs four t and four tinv matrices");
    for (std::size_t i = 0; i < 4; ++i) {
      m.t[i] = matrix_from_json<S>(j["t"][i]);
      m.tinv[i] = matrix_from_json<S>(j["tinv"][i]);
      if (m.t[i].rows() != m.dim || m.t[i].cols() != m.dim || m.tinv[i].rows() != m.dim ||
          m.tinv[i].cols() != m.dim)
        throw IoError("generator matrix has the wrong size");
    }
    return m;
  });
}

template <ScalarField S>
Json to_json(const ClassificationResult<S>& c) {
  return Json{{"twist", c.twist.value}, {"params", to_json(c.params)}, {"certificate", to_json(c.certificate)}};
}

template <ScalarField S>
Json to_json(const LMatrix<S>& l) {
  return Json{{"d", l.d}, {"route", route_name(l.route)}, {"entries", to_json(l.entries)}};
}

template <ScalarField S>
Json to_json(const LaurentPoly<S>& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f) out.push_back(Json::array({e, c.str()}));
  return out;
}

template <ScalarField S>
LaurentPoly<S> laurent_from_json(const Json& j) {
  return detail::json_guard([&] {
    if (!j.is_array()) throw IoError("Laurent polynomial must be an array of pairs");
    LaurentPoly<S> out;
    for (const auto& pr : j) {
      if (!pr.is_array() || pr.size() != 2) throw IoError("Laurent term must be [exponent, coeff]");
      detail::add_to(out, pr[0].get<int>(), scalar_from_json<S>(pr[1]));
    }
    return out;
  });
}

inline Json to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& c : r.items) items.push_back(Json{{"check", c.description}, {"pass", c.holds}});
  return Json{{"all_pass", r.all_pass()}, {"items", std::move(items)}};
}

inline Json to_json(const std::vector<Condition>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(Json{{"condition", c.description}, {"holds", c.holds}});
  return out;
}

template <ScalarField S>
Json to_json(const RelationReport<S>& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"relation", c.name}, {"pass", c.pass}};
    if (c.difference) e["difference"] = to_json(*c.difference);
    checks.push_back(std::move(e));
  }
  Json central = Json::array();
  for (const auto& c : r.central) central.push_back(c ? Json(c->str()) : Json());
  return Json{{"all_pass", r.all_pass()}, {"relations", std::move(checks)}, {"central", std::move(central)}};
}

}  // namespace dahamod
