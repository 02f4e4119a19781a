#ifndef CHROMSYM_H
#define CHROMSYM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CsBasis {
  CS_BASIS_M = 0,
  CS_BASIS_M_TILDE = 1,
  CS_BASIS_P = 2,
  CS_BASIS_E = 3,
} CsBasis;

typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_ARGUMENT = 1,
  CS_STATUS_INVALID_UTF8 = 2,
  CS_STATUS_PARSE_ERROR = 3,
  CS_STATUS_NOT_A_COGRAPH = 4,
  CS_STATUS_GUARD_EXCEEDED = 5,
  CS_STATUS_CAPACITY_EXCEEDED = 6,
  CS_STATUS_INVALID_ARGUMENT = 7,
  CS_STATUS_OVERFLOW = 8,
  CS_STATUS_PANIC = 9,
} CsStatus;

/**
 * Opaque construction expression.
 */
typedef struct CsExpr CsExpr;

/**
 * Opaque simple graph.
 */
typedef struct CsGraph CsGraph;

/**
 * Opaque symmetric function.
 */
typedef struct CsSymFunc CsSymFunc;

typedef struct CsClassFlags {
  bool threshold;
  bool trivially_perfect;
  bool cograph;
  bool claw_free;
  bool triangle_free_complement;
} CsClassFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next `cs_*` call on the same thread.
 */
const char *cs_last_error_message(void);

/**
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void cs_string_free(char *s);

/**
 * Parses `n=<count>; edges=u-v,...`.
 *
 * # Safety
 * `text` is null or NUL-terminated; `out` is null or writable.
 */
enum CsStatus cs_graph_parse(const char *text, struct CsGraph **out);

/**
 * # Safety
 * `expr` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_graph_from_expr(const struct CsExpr *expr, struct CsGraph **out);

/**
 * # Safety
 * `g` is null or a live handle that is not used afterwards.
 */
void cs_graph_free(struct CsGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` is null or a live handle.
 */
size_t cs_graph_vertex_count(const struct CsGraph *g);

/**
 * # Safety
 * `g` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_graph_to_string(const struct CsGraph *g, char **out);

/**
 * # Safety
 * `g` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_graph_classify(const struct CsGraph *g, struct CsClassFlags *out);

/**
 * Chromatic polynomial evaluated at `t`.
 *
 * # Safety
 * `g` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_graph_chromatic_eval(const struct CsGraph *g, int64_t t, int64_t *out);

/**
 * Parses a construction expression such as `J(U(K2,K1),K3)`.
 *
 * # Safety
 * `text` is null or NUL-terminated; `out` is null or writable.
 */
enum CsStatus cs_expr_parse(const char *text, struct CsExpr **out);

/**
 * Canonical cotree of a cograph; `CS_STATUS_NOT_A_COGRAPH` otherwise.
 *
 * # Safety
 * `g` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_expr_from_graph(const struct CsGraph *g, struct CsExpr **out);

/**
 * # Safety
 * `e` is null or a live handle that is not used afterwards.
 */
void cs_expr_free(struct CsExpr *e);

/**
 * Canonical text using only `K1`, `U(..)` and `J(..)`; with `sugar`,
 * all-leaf nodes print as `K<m>` / `E<m>`.
 *
 * # Safety
 * `e` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_expr_canonical_string(const struct CsExpr *e, bool sugar, char **out);

/**
 * Chromatic symmetric function of a graph in `basis` (a `CsBasis` value);
 * the p basis uses the edge-subset expansion.
 *
 * # Safety
 * `g` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_csf_graph(const struct CsGraph *g, uint32_t basis, struct CsSymFunc **out);

/**
 * Chromatic symmetric function of an expression by cotree recursion, in
 * `basis` (a `CsBasis` value).
 *
 * # Safety
 * `e` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_csf_expr(const struct CsExpr *e, uint32_t basis, struct CsSymFunc **out);

/**
 * # Safety
 * `f` is null or a live handle that is not used afterwards.
 */
void cs_symfunc_free(struct CsSymFunc *f);

/**
 * One line per term, e.g. `24 * e[4]`.
 *
 * # Safety
 * `f` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_symfunc_to_text(const struct CsSymFunc *f, char **out);

/**
 * # Safety
 * `f` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_symfunc_to_json(const struct CsSymFunc *f, char **out);

/**
 * Basis-independent equality; false when either handle is null.
 *
 * # Safety
 * `a` and `b` are null or live handles.
 */
bool cs_symfunc_equal(const struct CsSymFunc *a, const struct CsSymFunc *b);

/**
 * Re-expresses `f` in `basis` as a new handle.
 *
 * # Safety
 * `f` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_symfunc_to_basis(const struct CsSymFunc *f,
                                  uint32_t basis,
                                  struct CsSymFunc **out);

/**
 * True when every e-basis coefficient is non-negative.
 *
 * # Safety
 * `f` is null or a live handle; `out` is null or writable.
 */
enum CsStatus cs_symfunc_is_e_positive(const struct CsSymFunc *f, bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CHROMSYM_H */
