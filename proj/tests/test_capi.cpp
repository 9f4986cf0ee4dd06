// exercises the shared library through the C header only
#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "darbouxkit/darbouxkit.h"

using json = nlohmann::json;

namespace {

struct Ctx {
  dk_context* c = dk_context_new();
  ~Ctx() { dk_context_free(c); }

  std::pair<dk_status, json> run(const char* cmd, const json& args) {
    char* out = nullptr;
    dk_status st = dk_run(c, cmd, args.dump().c_str(), &out);
    REQUIRE(out != nullptr);
    json j = json::parse(out);
    dk_string_free(out);
    return {st, j};
  }
};

}

TEST_CASE("run a command and re-ingest its output") {
  Ctx ctx;
  auto [st, out] = ctx.run("darboux.apply", {{"family", {{"q", "1 - x^2"}}}, {"theta0", "-x"}});
  CHECK(st == DK_OK);
  CHECK(out["pass"] == true);
  CHECK(out["result"]["family"]["q"] == "(+ (* -1 (^ x 2)) -1)");
  auto [st2, back] = ctx.run("ingest", {{"value", out}});
  CHECK(st2 == DK_OK);
  // the family plus one report per check
  CHECK(back["result"]["objects"] == 1 + out["checks"].size());
}

TEST_CASE("status codes") {
  Ctx ctx;
  char* out = nullptr;
  CHECK(dk_run(ctx.c, "darboux.apply", "{not json", &out) == DK_BAD_INPUT);
  REQUIRE(out);
  CHECK(json::parse(out)["error"]["code"] == "MalformedJson");
  dk_string_free(out);
  CHECK(std::strlen(dk_last_error(ctx.c)) > 0);

  CHECK(ctx.run("darboux.apply", {{"family", {{"q", "1 -"}}}, {"theta0", "-x"}}).first == DK_BAD_INPUT);
  CHECK(ctx.run("no.such", json::object()).first == DK_BAD_INPUT);
  auto [st, j] = ctx.run("darboux.apply", {{"family", {{"q", "1 - x^2"}}}, {"theta0", "x^3"}});
  CHECK(st == DK_CHECK_FAILED);
  CHECK(j["error"]["code"] == "SeedNotSolution");
  CHECK(dk_run(nullptr, "x", "{}", &out) == DK_NULL_ARG);
  CHECK(std::string(dk_status_name(DK_CHECK_FAILED)) == "check_failed");
}

TEST_CASE("command list") {
  char* s = dk_commands();
  json names = json::parse(s);
  dk_string_free(s);
  for (const char* c : {"darboux.apply", "darboux.chain", "sympow", "so3.lift", "so3.darboux", "so3.riccati",
                        "susy.partners", "susy.spectrum", "susy.states", "frenet.build", "frenet.chain",
                        "rigid.build", "rigid.chain", "verify.numeric", "verify.oracle", "verify.case"})
    CHECK(std::find(names.begin(), names.end(), c) != names.end());
}

TEST_CASE("expression handles") {
  Ctx ctx;
  dk_expr* e = nullptr;
  REQUIRE(dk_expr_parse(ctx.c, "(4*x^2 - 2)*exp(-x^2/2)", &e) == DK_OK);
  double re = 0, im = 0;
  REQUIRE(dk_expr_eval(ctx.c, e, 1.0, &re, &im) == DK_OK);
  CHECK(re == doctest::Approx(2 * std::exp(-0.5)));
  CHECK(im == 0.0);
  dk_expr* d = nullptr;
  REQUIRE(dk_expr_diff(ctx.c, e, &d) == DK_OK);
  dk_expr* want = nullptr;
  REQUIRE(dk_expr_parse(ctx.c, "(-4*x^3 + 10*x)*exp(-x^2/2)", &want) == DK_OK);
  CHECK(dk_expr_equal(d, want) == 1);
  CHECK(dk_expr_equal(e, want) == 0);
  char* s = dk_expr_sexpr(d);
  dk_expr* back = nullptr;
  REQUIRE(dk_expr_parse(ctx.c, s, &back) == DK_OK);
  CHECK(dk_expr_equal(back, d) == 1);
  dk_string_free(s);
  dk_expr* bad = nullptr;
  CHECK(dk_expr_parse(ctx.c, "x +", &bad) == DK_BAD_INPUT);
  CHECK(bad == nullptr);
  dk_expr* sym = nullptr;
  REQUIRE(dk_expr_parse(ctx.c, "kappa*x", &sym) == DK_OK);
  CHECK(dk_expr_eval(ctx.c, sym, 1.0, &re, &im) != DK_OK);
  for (auto* p : {e, d, want, back, sym}) dk_expr_free(p);
}
