/* C interface of the darbouxkit shared library. All strings are UTF-8.
   Strings returned through char** are owned by the caller: release them
   with dk_string_free. */
#ifndef DARBOUXKIT_H
#define DARBOUXKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DK_API __declspec(dllexport)
#else
#define DK_API __attribute__((visibility("default")))
#endif

typedef struct dk_context dk_context;
typedef struct dk_expr dk_expr;

typedef enum {
  DK_OK = 0,
  DK_CHECK_FAILED = 1, /* ran, but a verification did not pass */
  DK_BAD_INPUT = 2,    /* malformed JSON, expression or argument */
  DK_ERROR = 3,        /* anything else */
  DK_NULL_ARG = 4
} dk_status;

DK_API const char* dk_version(void);
DK_API const char* dk_status_name(dk_status s);

/* DARBOUXKIT_LOG (trace, debug, info, warn, error, off) sets verbosity */
DK_API dk_context* dk_context_new(void);
DK_API void dk_context_free(dk_context* ctx);
/* message of the last failing call on ctx, "" if none */
DK_API const char* dk_last_error(const dk_context* ctx);

/* Runs a command such as "darboux.apply" with a JSON object of arguments.
   *out_json receives {"command", "result", "checks", "pass"}, or
   {"command", "error", "pass": false} on failure. */
DK_API dk_status dk_run(dk_context* ctx, const char* command, const char* args_json, char** out_json);
/* JSON array of command names */
DK_API char* dk_commands(void);
DK_API void dk_string_free(char* s);

/* expressions: infix or canonical S-expression text */
DK_API dk_status dk_expr_parse(dk_context* ctx, const char* text, dk_expr** out);
DK_API void dk_expr_free(dk_expr* e);
DK_API char* dk_expr_sexpr(const dk_expr* e);
DK_API char* dk_expr_infix(const dk_expr* e);
/* d/dx, with symbols treated as free functions */
DK_API dk_status dk_expr_diff(dk_context* ctx, const dk_expr* e, dk_expr** out);
/* value at a real x; parameters and symbols must be absent */
DK_API dk_status dk_expr_eval(dk_context* ctx, const dk_expr* e, double x, double* re, double* im);
/* 1 if the difference is exactly zero, 0 if not, -1 on a null argument */
DK_API int dk_expr_equal(const dk_expr* a, const dk_expr* b);

#ifdef __cplusplus
}
#endif

#endif
