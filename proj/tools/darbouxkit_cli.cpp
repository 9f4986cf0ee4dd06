// darbouxkit command-line front end; talks to the library only through darbouxkit.h
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "darbouxkit/darbouxkit.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

#ifndef DK_GOLDEN_DIR
#define DK_GOLDEN_DIR "data/golden"
#endif

namespace {

enum Exit { kOk = 0, kFailed = 1, kMalformed = 2 };

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family, m0, route, out, interval, orthogonal;
  std::vector<std::string> theta0;
  std::string omega1, omega2, kappa, tau, W, f, a = "a", kind = "rigid", golden = DK_GOLDEN_DIR;
  std::vector<std::string> params, files;
  int k = -1, n = 5, order = 2, samples = 5, seed = 1;
  double tol = 1e-8, step = 1e-3;
  bool rigid = false, frenet = false, all = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw BadInput(path + ": " + e.what());
  }
}

// path to a JSON file, or inline JSON
json json_arg(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b != std::string::npos && s[b] == '{') {
    try {
      return json::parse(s);
    } catch (const json::exception& e) {
      throw BadInput(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(s);
}

int status_exit(dk_status st) {
  switch (st) {
    case DK_OK: return kOk;
    case DK_BAD_INPUT:
    case DK_NULL_ARG: return kMalformed;
    default: return kFailed;
  }
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw BadInput("cannot write " + out);
  f << j.dump(2) << "\n";
  spdlog::info("wrote {}", out);
}

struct Runner {
  dk_context* ctx = dk_context_new();
  ~Runner() { dk_context_free(ctx); }

  std::pair<dk_status, json> run(const std::string& cmd, const json& args) {
    char* raw = nullptr;
    dk_status st = dk_run(ctx, cmd.c_str(), args.dump().c_str(), &raw);
    json out = raw ? json::parse(raw) : json{{"command", cmd}, {"pass", false}};
    dk_string_free(raw);
    if (st != DK_OK) spdlog::warn("{}: {} ({})", cmd, dk_status_name(st), dk_last_error(ctx));
    return {st, out};
  }
};

void put_if(json& j, const char* key, const std::string& v) {
  if (!v.empty()) j[key] = v;
}

json common_args(const Options& o) {
  json a = json::object();
  if (!o.family.empty()) a["family"] = json_arg(o.family);
  if (!o.theta0.empty()) a["theta0"] = o.theta0.size() == 1 ? json(o.theta0[0]) : json(o.theta0);
  put_if(a, "m0", o.m0);
  put_if(a, "route", o.route);
  if (o.k >= 0) a["k"] = o.k;
  a["tol"] = o.tol;
  a["step"] = o.step;
  a["seed"] = o.seed;
  if (!o.interval.empty()) {
    std::string iv = o.interval;
    std::replace(iv.begin(), iv.end(), ',', ' ');
    std::istringstream in(iv);
    double lo, hi;
    if (!(in >> lo >> hi)) throw BadInput("--interval expects a,b");
    a["interval"] = {lo, hi};
  }
  if (!o.params.empty()) a["parameters"] = o.params;
  return a;
}

json app_args(const Options& o, const char* kind) {
  json a = common_args(o);
  json app{{"kind", kind}};
  put_if(app, "omega1", o.omega1);
  put_if(app, "omega2", o.omega2);
  put_if(app, "kappa", o.kappa);
  put_if(app, "tau", o.tau);
  if (!o.params.empty()) app["parameters"] = o.params;
  a["app"] = app;
  return a;
}

int run_single(Runner& r, const std::string& cmd, const json& args, const Options& o) {
  auto [st, out] = r.run(cmd, args);
  emit(out, o.out);
  return status_exit(st);
}

// golden cases: every *.json file of the directory, or the given files
int run_verify_cases(Runner& r, const Options& o) {
  std::vector<std::string> files = o.files;
  if (o.all) {
    if (!fs::is_directory(o.golden)) throw BadInput("no golden directory " + o.golden);
    for (auto& e : fs::directory_iterator(o.golden))
      if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
  }
  if (files.empty()) throw BadInput("verify: give --all or case files");
  json cases = json::array();
  int worst = kOk;
  size_t failed = 0;
  for (auto& f : files) {
    json c = read_json_file(f);
    auto [st, out] = r.run("verify.case", c);
    int e = status_exit(st);
    worst = std::max(worst, e);
    if (e != kOk) ++failed;
    json entry{{"file", fs::path(f).filename().string()}, {"pass", out.value("pass", false)}};
    if (out.contains("checks")) entry["checks"] = out["checks"];
    if (out.contains("error")) entry["error"] = out["error"];
    cases.push_back(entry);
    spdlog::info("{}: {}", f, e == kOk ? "pass" : "FAIL");
  }
  emit(json{{"command", "verify"}, {"cases", cases}, {"failed", failed}, {"pass", worst == kOk}}, o.out);
  return worst;
}

void setup_logging() {
  if (!spdlog::get("darbouxkit")) spdlog::set_default_logger(spdlog::stderr_color_mt("darbouxkit"));
  const char* lv = std::getenv("DARBOUXKIT_LOG");
  spdlog::set_level(lv ? spdlog::level::from_str(lv) : spdlog::level::warn);
}

}

int main(int argc, char** argv) {
  setup_logging();
  Options o;
  CLI::App app{"Darboux transformations for second-order families, Sym2 and so(3) systems"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "write JSON here instead of stdout"); };
  auto add_family = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--family", o.family, "family JSON file or inline JSON");
    if (required) opt->required();
  };
  auto add_seed = [&](CLI::App* c) {
    c->add_option("--theta0", o.theta0, "seed y0'/y0; repeat for a chain");
  };
  auto add_numeric = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    c->add_option("--step", o.step, "RK4 step")->check(CLI::PositiveNumber);
    c->add_option("--interval", o.interval, "a,b");
    c->add_option("--seed", o.seed, "RNG seed for sampled checks");
  };
  auto add_params = [&](CLI::App* c) { c->add_option("--param", o.params, "extra parameter name"); };

  auto* darboux = app.add_subcommand("darboux", "Darboux transformation of a scalar family");
  darboux->require_subcommand(1);
  auto* d_apply = darboux->add_subcommand("apply", "one step");
  add_family(d_apply, true);
  add_seed(d_apply);
  d_apply->add_option("--m0", o.m0, "energy of the seed");
  add_out(d_apply);
  auto* d_chain = darboux->add_subcommand("chain", "k steps");
  add_family(d_chain, true);
  add_seed(d_chain);
  d_chain->add_option("--k", o.k, "chain length")->check(CLI::NonNegativeNumber);
  add_out(d_chain);

  auto* sympow = app.add_subcommand("sympow", "symmetric power of the companion system");
  add_family(sympow, true);
  sympow->add_option("--k", o.k, "degree")->check(CLI::PositiveNumber);
  add_out(sympow);

  auto* so3 = app.add_subcommand("so3", "so(3) systems");
  so3->require_subcommand(1);
  auto* s_lift = so3->add_subcommand("lift", "orthogonal system of a family");
  add_family(s_lift, true);
  s_lift->add_option("--route", o.route)->check(CLI::IsMember({"Q", "S"}));
  add_out(s_lift);
  auto* s_dar = so3->add_subcommand("darboux", "lifted Darboux transformation");
  add_family(s_dar, false);
  s_dar->add_option("--route", o.route)->check(CLI::IsMember({"Q", "S"}));
  add_seed(s_dar);
  s_dar->add_flag("--rigid", o.rigid, "rigid-body data");
  s_dar->add_flag("--frenet", o.frenet, "Frenet-Serret data");
  s_dar->add_option("--omega1", o.omega1);
  s_dar->add_option("--omega2", o.omega2);
  s_dar->add_option("--kappa", o.kappa);
  s_dar->add_option("--tau", o.tau);
  add_params(s_dar);
  add_out(s_dar);
  auto* s_ric = so3->add_subcommand("riccati", "Riccati and linear forms");
  add_family(s_ric, false);
  s_ric->add_option("--orthogonal", o.orthogonal, "orthogonal system JSON");
  s_ric->add_option("--route", o.route)->check(CLI::IsMember({"Q", "S"}));
  add_out(s_ric);

  auto* susy = app.add_subcommand("susy", "supersymmetric quantum mechanics");
  susy->require_subcommand(1);
  auto* u_part = susy->add_subcommand("partners", "V- and V+");
  u_part->add_option("--W", o.W, "superpotential");
  add_seed(u_part);
  add_params(u_part);
  add_out(u_part);
  auto* u_spec = susy->add_subcommand("spectrum", "shape-invariant spectrum");
  u_spec->add_option("--n", o.n)->check(CLI::NonNegativeNumber);
  u_spec->add_option("--W", o.W, "superpotential W(x; a)");
  u_spec->add_option("--f", o.f, "reparametrization a -> f(a)");
  u_spec->add_option("--a", o.a, "parameter name");
  add_out(u_spec);
  auto* u_states = susy->add_subcommand("states", "oscillator states from the ladder");
  u_states->add_option("--n", o.n)->check(CLI::NonNegativeNumber);
  u_states->add_option("--order", o.order)->check(CLI::IsMember({2, 3}));
  add_out(u_states);

  std::vector<std::pair<CLI::App*, std::string>> app_cmds;
  for (const char* kind : {"frenet", "rigid"}) {
    auto* c = app.add_subcommand(kind, std::string(kind) == "frenet" ? "Frenet-Serret frames" : "rigid-body rotation");
    c->require_subcommand(1);
    for (const char* what : {"build", "chain"}) {
      auto* s = c->add_subcommand(what, what);
      s->add_option("--route", o.route)->check(CLI::IsMember({"Q", "S"}));
      if (std::string(kind) == "frenet") {
        s->add_option("--kappa", o.kappa);
        s->add_option("--tau", o.tau);
      } else {
        s->add_option("--omega1", o.omega1);
        s->add_option("--omega2", o.omega2);
      }
      add_params(s);
      if (std::string(what) == "chain") {
        add_seed(s);
        s->add_option("--k", o.k, "chain length")->check(CLI::NonNegativeNumber);
      }
      add_out(s);
      app_cmds.emplace_back(s, std::string(kind) + "." + what);
    }
  }

  auto* verify = app.add_subcommand("verify", "golden suite and numeric checks");
  verify->add_flag("--all", o.all, "run every golden case");
  verify->add_option("--golden", o.golden, "golden directory");
  verify->add_option("files", o.files, "golden case files");
  add_out(verify);
  auto* v_num = verify->add_subcommand("numeric", "residual sweeps on random samples");
  v_num->add_option("--kind", o.kind)->check(CLI::IsMember({"rigid", "frenet"}));
  v_num->add_option("--route", o.route)->check(CLI::IsMember({"Q", "S"}));
  v_num->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  add_numeric(v_num);
  add_out(v_num);
  auto* v_or = verify->add_subcommand("oracle", "RK4 order and mutation detection");
  add_numeric(v_or);
  add_out(v_or);
  add_numeric(verify);

  auto* ingest = app.add_subcommand("ingest", "re-read an emitted artifact and check it serializes back unchanged");
  std::string artifact;
  ingest->add_option("artifact", artifact, "JSON file")->required();
  add_out(ingest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    Runner r;
    if (d_apply->parsed()) return run_single(r, "darboux.apply", common_args(o), o);
    if (d_chain->parsed()) return run_single(r, "darboux.chain", common_args(o), o);
    if (sympow->parsed()) return run_single(r, "sympow", common_args(o), o);
    if (s_lift->parsed()) return run_single(r, "so3.lift", common_args(o), o);
    if (s_dar->parsed()) {
      if (o.rigid || o.frenet) {
        json a = app_args(o, o.rigid ? "rigid" : "frenet");
        a.erase("family");
        return run_single(r, "so3.darboux", a, o);
      }
      return run_single(r, "so3.darboux", common_args(o), o);
    }
    if (s_ric->parsed()) {
      json a = common_args(o);
      if (!o.orthogonal.empty()) a["orthogonal"] = json_arg(o.orthogonal);
      return run_single(r, "so3.riccati", a, o);
    }
    if (u_part->parsed()) {
      json a = common_args(o);
      put_if(a, "W", o.W);
      return run_single(r, "susy.partners", a, o);
    }
    if (u_spec->parsed()) {
      json a{{"n", o.n}, {"a", o.a}};
      put_if(a, "W", o.W);
      put_if(a, "f", o.f);
      return run_single(r, "susy.spectrum", a, o);
    }
    if (u_states->parsed()) return run_single(r, "susy.states", json{{"n", o.n}, {"order", o.order}}, o);
    for (auto& [c, name] : app_cmds) {
      if (!c->parsed()) continue;
      return run_single(r, name, app_args(o, name.substr(0, name.find('.')).c_str()), o);
    }
    if (v_num->parsed()) {
      json a = common_args(o);
      a["kind"] = o.kind;
      a["samples"] = o.samples;
      return run_single(r, "verify.numeric", a, o);
    }
    if (v_or->parsed()) return run_single(r, "verify.oracle", common_args(o), o);
    if (verify->parsed()) return run_verify_cases(r, o);
    if (ingest->parsed()) return run_single(r, "ingest", json{{"value", read_json_file(artifact)}}, o);
  } catch (const BadInput& e) {
    spdlog::error("{}", e.what());
    std::cout << json{{"pass", false}, {"error", {{"code", "MalformedInput"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kFailed;
  }
  return kMalformed;
}
