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
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dahamod/dahamod.h"

namespace {

struct ParamArgs {
  std::string q;
  std::string k;
  int d = -1;
  std::string parity = "even";
  std::string backend = "rational";
};

struct Options {
  ParamArgs p;
  std::string out;
  std::string route = "all";
  std::string selftest_backend = "all";
  std::vector<std::string> inputs;
  std::uint64_t seed = 20261018;
  int grid = -1;
  int twist = 0;
};

int report_error(int code) {
  std::cerr << "error: " << dahamod_last_error() << "\n";
  return code;
}

int io_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return DAHAMOD_E_IO;
}

// Writes text to --out or stdout.
int deliver(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) return io_error("cannot write " + o.out);
  f << text;
  return f ? 0 : io_error("failed writing " + o.out);
}

// Delivers an owned C string (possibly null) and returns the status code.
int finish(const Options& o, dahamod_status st, char* text) {
  int rc = 0;
  if (text) {
    rc = deliver(o, text);
    dahamod_string_free(text);
  }
  if (rc) return rc;
  return st == DAHAMOD_OK ? 0 : report_error(st);
}

bool read_file(const std::string& path, std::string& content) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  content = ss.str();
  return true;
}

// Loads a module file; returns nonzero status on failure.
int load_module(const std::string& path, dahamod_module** m) {
  std::string text;
  if (!read_file(path, text)) return io_error("cannot read " + path);
  const auto st = dahamod_module_from_json(text.c_str(), m);
  return st == DAHAMOD_OK ? 0 : report_error(st);
}

// k values are separated by ';' when any is present, otherwise by ','.
std::vector<std::string> split_k(const std::string& s) {
  const char sep = s.find(';') != std::string::npos ? ';' : ',';
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

struct OwnedParams {
  std::vector<std::string> k;
  std::string q;
  dahamod_params c{};
};

int build_params(const ParamArgs& a, OwnedParams& p) {
  p.k = split_k(a.k);
  if (a.q.empty() || p.k.size() != 4 || a.d < 0) {
    std::cerr << "error: --q, --k (four values) and --d are required\n";
    return DAHAMOD_E_USAGE;
  }
  p.q = a.q;
  p.c.backend = a.backend == "ratfun" ? DAHAMOD_BACKEND_RATFUN : DAHAMOD_BACKEND_RATIONAL;
  p.c.q = p.q.c_str();
  for (std::size_t i = 0; i < 4; ++i) p.c.k[i] = p.k[i].c_str();
  p.c.d = a.d;
  p.c.parity = a.parity == "odd" ? DAHAMOD_PARITY_ODD : DAHAMOD_PARITY_EVEN;
  return 0;
}

void add_param_flags(CLI::App* cmd, ParamArgs& a, bool with_parity) {
  cmd->add_option("--q", a.q, "q as an exact scalar")->required();
  cmd->add_option("--k", a.k, "k0,k1,k2,k3 (use ';' to separate rational-function literals)")->required();
  cmd->add_option("--d", a.d, "d (module dimension is d+1)")->required();
  if (with_parity)
    cmd->add_option("--parity", a.parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
  cmd->add_option("--backend", a.backend, "rational or ratfun")->check(CLI::IsMember({"rational", "ratfun"}));
}

int cmd_construct(const Options& o) {
  OwnedParams p;
  if (int rc = build_params(o.p, p)) return rc;
  dahamod_module* m = nullptr;
  if (auto st = dahamod_construct(&p.c, &m); st != DAHAMOD_OK) return report_error(st);
  char* text = nullptr;
  const auto st = dahamod_module_to_json(m, &text);
  dahamod_module_free(m);
  return finish(o, st, text);
}

template <class F>
int with_module(const Options& o, F&& f) {
  dahamod_module* m = nullptr;
  if (int rc = load_module(o.inputs.at(0), &m)) return rc;
  const int rc = f(m);
  dahamod_module_free(m);
  return rc;
}

int cmd_verify(const Options& o) {
  return with_module(o, [&](dahamod_module* m) {
    char* text = nullptr;
    const auto st = dahamod_verify(m, &text);
    return finish(o, st, text);
  });
}

int cmd_irreducible(const Options& o) {
  return with_module(o, [&](dahamod_module* m) {
    char* text = nullptr;
    int irr = 0;
    const auto st = dahamod_irreducible(m, &irr, &text);
    return finish(o, st, text);
  });
}

int cmd_classify(const Options& o) {
  return with_module(o, [&](dahamod_module* m) {
    char* text = nullptr;
    const auto st = dahamod_classify(m, &text);
    return finish(o, st, text);
  });
}

int cmd_twist(const Options& o) {
  return with_module(o, [&](dahamod_module* m) {
    dahamod_module* t = nullptr;
    if (auto st = dahamod_twist(m, o.twist, &t); st != DAHAMOD_OK) return report_error(st);
    char* text = nullptr;
    const auto st = dahamod_module_to_json(t, &text);
    dahamod_module_free(t);
    return finish(o, st, text);
  });
}

int cmd_intertwiner(const Options& o) {
  dahamod_module* a = nullptr;
  dahamod_module* b = nullptr;
  if (int rc = load_module(o.inputs.at(0), &a)) return rc;
  if (int rc = load_module(o.inputs.at(1), &b)) {
    dahamod_module_free(a);
    return rc;
  }
  char* text = nullptr;
  const auto st = dahamod_intertwiner(a, b, &text);
  dahamod_module_free(a);
  dahamod_module_free(b);
  return finish(o, st, text);
}

int cmd_lmatrix(const Options& o) {
  OwnedParams p;
  if (int rc = build_params(o.p, p)) return rc;
  const dahamod_route r = o.route == "operator"     ? DAHAMOD_ROUTE_OPERATOR
                          : o.route == "recurrence" ? DAHAMOD_ROUTE_RECURRENCE
                          : o.route == "closed"     ? DAHAMOD_ROUTE_CLOSED
                                                    : DAHAMOD_ROUTE_ALL;
  char* text = nullptr;
  const auto st = dahamod_lmatrix(&p.c, r, &text);
  return finish(o, st, text);
}

int cmd_orbit(const Options& o) {
  OwnedParams p;
  if (int rc = build_params(o.p, p)) return rc;
  p.c.parity = DAHAMOD_PARITY_EVEN;
  char* text = nullptr;
  const auto st = dahamod_orbit(&p.c, &text);
  return finish(o, st, text);
}

int cmd_sweep(const Options& o) {
  char* text = nullptr;
  const auto st = dahamod_sweep(o.seed, o.grid, &text);
  return finish(o, st, text);
}

int cmd_selftest(const Options& o) {
  const int mask = o.selftest_backend == "rational" ? 1 : o.selftest_backend == "ratfun" ? 2 : 3;
  char* text = nullptr;
  const auto st = dahamod_selftest(o.seed, o.grid, mask, &text);
  return finish(o, st, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional modules of the universal DAHA of type (C1v,C1)"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "build the E or O module for a parameter quadruple");
  add_param_flags(construct, o.p, true);

  auto* verify = app.add_subcommand("verify", "check relations and identities of a module file");
  auto* irreducible = app.add_subcommand("irreducible", "closure dimension and criterion of a module file");
  auto* classify = app.add_subcommand("classify", "recover twist and parameters of an irreducible module");
  for (auto* c : {verify, irreducible, classify}) c->add_option("module", o.inputs, "module file")->required()->expected(1);

  auto* intertwiner = app.add_subcommand("intertwiner", "search for an isomorphism between two modules");
  intertwiner->add_option("modules", o.inputs, "two module files")->required()->expected(2);

  auto* twist = app.add_subcommand("twist", "apply the cyclic generator shift");
  twist->add_option("module", o.inputs, "module file")->required()->expected(1);
  twist->add_option("--twist", o.twist, "shift e modulo 4")->required();

  auto* lmatrix = app.add_subcommand("lmatrix", "L-matrix by one or all routes");
  add_param_flags(lmatrix, o.p, true);
  lmatrix->add_option("--route", o.route, "operator, recurrence, closed or all")
      ->check(CLI::IsMember({"operator", "recurrence", "closed", "all"}));

  auto* orbit = app.add_subcommand("orbit", "sign orbit and canonical representative of an even quadruple");
  add_param_flags(orbit, o.p, false);

  auto* sweep = app.add_subcommand("sweep", "criterion against closure over a seeded grid");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  for (auto* c : {sweep, selftest}) {
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--grid", o.grid, "samples per group; 0 for fixed examples only");
  }
  selftest->add_option("--backend", o.selftest_backend, "rational, ratfun or all")
      ->check(CLI::IsMember({"rational", "ratfun", "all"}));

  for (auto* c : {construct, verify, irreducible, classify, intertwiner, twist, lmatrix, orbit, sweep, selftest})
    c->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return DAHAMOD_E_USAGE;
  }

  if (construct->parsed()) return cmd_construct(o);
  if (verify->parsed()) return cmd_verify(o);
  if (irreducible->parsed()) return cmd_irreducible(o);
  if (classify->parsed()) return cmd_classify(o);
  if (intertwiner->parsed()) return cmd_intertwiner(o);
  if (twist->parsed()) return cmd_twist(o);
  if (lmatrix->parsed()) return cmd_lmatrix(o);
  if (orbit->parsed()) return cmd_orbit(o);
  if (sweep->parsed()) return cmd_sweep(o);
  if (selftest->parsed()) return cmd_selftest(o);
  return DAHAMOD_E_USAGE;
}
