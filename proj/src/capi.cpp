#include "darbouxkit/darbouxkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <spdlog/spdlog.h>

#include "darbouxkit/commands.hpp"

using namespace darbouxkit;

struct dk_context {
  std::string last_error;
};

struct dk_expr {
  Expr e;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

dk_status fail(dk_context* ctx, dk_status s, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  spdlog::debug("dk: {}", msg);
  return s;
}

void configure_logging() {
  const char* lv = std::getenv("DARBOUXKIT_LOG");
  spdlog::set_level(lv ? spdlog::level::from_str(lv) : spdlog::level::warn);
}

// free functions for every symbol, so diff never hits UnknownSymbol
DerivationTable free_table(const Expr& e) {
  DerivationTable t;
  declare_unknown_free(t, {e});
  return t;
}

}

extern "C" {

DK_API const char* dk_version(void) { return "0.1.0"; }

DK_API const char* dk_status_name(dk_status s) {
  switch (s) {
    case DK_OK: return "ok";
    case DK_CHECK_FAILED: return "check_failed";
    case DK_BAD_INPUT: return "bad_input";
    case DK_ERROR: return "error";
    case DK_NULL_ARG: return "null_argument";
  }
  return "unknown";
}

DK_API dk_context* dk_context_new(void) {
  configure_logging();
  return new (std::nothrow) dk_context;
}

DK_API void dk_context_free(dk_context* ctx) { delete ctx; }

DK_API const char* dk_last_error(const dk_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

DK_API dk_status dk_run(dk_context* ctx, const char* command, const char* args_json, char** out_json) {
  if (!ctx || !command || !out_json) return DK_NULL_ARG;
  *out_json = nullptr;
  ctx->last_error.clear();
  json out{{"command", command}, {"pass", false}};
  dk_status st = DK_OK;
  try {
    json args = args_json && *args_json ? json::parse(args_json) : json::object();
    spdlog::info("running {}", command);
    out = run_command(command, args);
    if (!out.at("pass").get<bool>()) {
      st = DK_CHECK_FAILED;
      ctx->last_error = "verification failed";
      for (auto& c : out.at("checks"))
        if (!c.at("pass").get<bool>()) spdlog::warn("check failed: {}", c.at("check").get<std::string>());
    }
  } catch (const Error& e) {
    st = fail(ctx, error_status(e.code()) == 2 ? DK_BAD_INPUT : DK_CHECK_FAILED, e.what());
    out["error"] = error_json(e);
  } catch (const json::exception& e) {
    st = fail(ctx, DK_BAD_INPUT, e.what());
    out["error"] = {{"code", "MalformedJson"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    st = fail(ctx, DK_ERROR, e.what());
    out["error"] = {{"code", "Internal"}, {"message", e.what()}};
  }
  *out_json = dup(out.dump(2));
  return st;
}

DK_API char* dk_commands(void) { return dup(json(command_names()).dump()); }

DK_API void dk_string_free(char* s) { std::free(s); }

DK_API dk_status dk_expr_parse(dk_context* ctx, const char* text, dk_expr** out) {
  if (!text || !out) return DK_NULL_ARG;
  *out = nullptr;
  try {
    *out = new dk_expr{parse_expr(text)};
    return DK_OK;
  } catch (const Error& e) {
    return fail(ctx, DK_BAD_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, DK_ERROR, e.what());
  }
}

DK_API void dk_expr_free(dk_expr* e) { delete e; }

DK_API char* dk_expr_sexpr(const dk_expr* e) { return e ? dup(e->e.sexpr()) : nullptr; }

DK_API char* dk_expr_infix(const dk_expr* e) { return e ? dup(e->e.infix()) : nullptr; }

DK_API dk_status dk_expr_diff(dk_context* ctx, const dk_expr* e, dk_expr** out) {
  if (!e || !out) return DK_NULL_ARG;
  *out = nullptr;
  try {
    *out = new dk_expr{differentiate(e->e, free_table(e->e))};
    return DK_OK;
  } catch (const std::exception& ex) {
    return fail(ctx, DK_ERROR, ex.what());
  }
}

DK_API dk_status dk_expr_eval(dk_context* ctx, const dk_expr* e, double x, double* re, double* im) {
  if (!e || !re || !im) return DK_NULL_ARG;
  try {
    cplx v = evaluate(e->e, {{"x", x}});
    *re = v.real();
    *im = v.imag();
    return DK_OK;
  } catch (const Error& ex) {
    return fail(ctx, ex.code() == ErrorCode::UnboundSymbol ? DK_BAD_INPUT : DK_ERROR, ex.what());
  } catch (const std::exception& ex) {
    return fail(ctx, DK_ERROR, ex.what());
  }
}

DK_API int dk_expr_equal(const dk_expr* a, const dk_expr* b) {
  if (!a || !b) return -1;
  return a->e == b->e ? 1 : 0;
}

}
