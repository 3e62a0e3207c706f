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

#include "dahamod/json_io.hpp"
#include "dahamod/sampling.hpp"

using namespace dahamod;
using R = Rational;
using F = RatFun;
using P = ParamQuadruple<R>;

namespace {

P e_example() { return P::make(R(2), {R(1, 2), R(1), R(3), R(1)}, 1, Parity::Even); }

Json example_module_json() { return to_json(make_E(e_example())); }

}  // namespace

TEST_CASE("module JSON layout") {
  const Json j = example_module_json();
  CHECK(j["dim"] == 2);
  CHECK(j["twist"] == 0);
  CHECK(j["params"]["q"] == "2");
  CHECK(j["params"]["k"] == Json::array({"1/2", "1", "3", "1"}));
  CHECK(j["params"]["d"] == 1);
  CHECK(j["params"]["parity"] == "even");
  CHECK(j["t"].size() == 4);
  CHECK(j["tinv"].size() == 4);
  CHECK(j["t"][2]["entries"] == Json::array({Json::array({"1", "-4/3"}), Json::array({"-1", "7/3"})}));
}

TEST_CASE("round trips") {
  Sampler s(8);
  for (int t = 0; t < 20; ++t) {
    const Parity parity = t % 2 ? Parity::Odd : Parity::Even;
    const int d = 2 * static_cast<int>(s.index(3)) + (parity == Parity::Even ? 1 : 0);
    const auto m = twist(make_module(s.any(R(3, 2), d, parity)), TwistElement(t % 4));
    const auto back = module_from_json<R>(Json::parse(to_json(m).dump()));
    CHECK(back.t == m.t);
    CHECK(back.tinv == m.tinv);
    CHECK(back.params == m.params);
    CHECK(back.twist == m.twist);
    CHECK(back.label == m.label);
  }
  const F q = F::parse("q");
  const auto pf = ParamQuadruple<F>::make(q, {q.inverse(), F(R(1)), F(R(3)), F(R(1))}, 1, Parity::Even);
  const auto mf = make_E(pf);
  const Json jf = to_json(mf);
  CHECK(infer_backend(jf["params"]) == Backend::RatFun);
  CHECK(infer_backend(example_module_json()["params"]) == Backend::Rational);
  CHECK(module_from_json<F>(Json::parse(jf.dump())).t == mf.t);

  const LaurentPoly<R> f{{-2, R(3, 4)}, {5, R(-1)}};
  CHECK(laurent_from_json<R>(to_json(f)) == f);
  CHECK(params_from_json<R>(to_json(e_example())) == e_example());
}

TEST_CASE("malformed input is an IO error") {
  Json j = example_module_json();
  Json bad = j;
  bad.erase("tinv");
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  bad = j;
  bad["t"][0]["entries"][0][0] = "one";
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  bad = j;
  bad["t"][0]["entries"][0][0] = 1;
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  bad = j;
  bad["t"][1]["rows"] = "x";
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  bad = j;
  bad["dim"] = 3;
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  bad = j;
  bad["params"]["parity"] = "both";
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  bad = j;
  bad["params"]["k"] = Json::array({"1/2", "1", "3"});
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  bad = j;
  bad["t"][3]["entries"][1] = Json::array({"0"});
  CHECK_THROWS_AS(module_from_json<R>(bad), IoError);
  CHECK_THROWS_AS(module_from_json<R>(Json::array()), IoError);
  CHECK_THROWS_AS(infer_backend(Json{{"q", 2}}), IoError);
  CHECK_THROWS_AS(laurent_from_json<R>(Json{{"x", 1}}), IoError);
  CHECK_THROWS_AS(laurent_from_json<R>(Json::array({Json::array({"a", "1"})})), IoError);
}

TEST_CASE("constraint violations in files stay constraint violations") {
  Json j = example_module_json();
  j["params"]["k"][0] = "1";
  CHECK_THROWS_AS(module_from_json<R>(j), ContractViolation);
}

TEST_CASE("loaded matrices are not trusted") {
  Json j = example_module_json();
  j["t"][2]["entries"][0][0] = "2";
  const auto m = module_from_json<R>(j);
  CHECK_FALSE(verify_relations(m).all_pass());
}
