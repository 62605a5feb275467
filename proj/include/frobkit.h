#ifndef FROBKIT_H
#define FROBKIT_H

/*
 * frobkit — exact computation with Frobenius-algebra endomorphisms on
 * matrix algebras: predicate checks (selfdual, unital, idempotent,
 * convolution-stable, exchange relations, biprojection), idempotent
 * splitting with induced Frobenius structure, subalgebra embedding,
 * diagrammatic evaluation, and Groebner-certified claims.
 *
 * Conventions:
 *   - All structured input and output is JSON text (UTF-8, NUL-terminated).
 *     Rationals are exact strings "p" or "p/q".
 *   - Strings returned through `char**` out-parameters are heap-allocated;
 *     release them with frob_string_free().  Out-parameters are set to NULL
 *     before any work happens, and may be NULL to skip that output.
 *   - Every call resets the calling thread's error message; on any status
 *     other than FROB_OK, frob_last_error() describes what happened.
 *   - Handles are not thread-safe individually, but distinct handles may be
 *     used from distinct threads freely.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI maps them one-to-one onto exit codes. */
typedef enum frob_status {
  FROB_OK = 0,        /* verified / true / succeeded */
  FROB_FALSE = 1,     /* well-posed input, mathematically false */
  FROB_EINVAL = 2,    /* malformed input or usage error */
  FROB_ERESOURCE = 3, /* budget exhausted before an answer was reached */
  FROB_EINTERNAL = 4  /* unexpected internal failure */
} frob_status;

/* An endomorphism of M_n: coefficients A[i][j][k][l] of E_{k,l} in the
 * image of E_{i,j}, either rational or polynomial in named parameters. */
typedef struct frob_endo frob_endo;

/* Library version, e.g. "1.0.0".  Static storage; do not free. */
const char* frob_version(void);

/* Message for the most recent call on this thread; empty string after a
 * successful call.  Static per-thread storage; do not free. */
const char* frob_last_error(void);

/* Releases a string returned through a char** out-parameter.  NULL is ok. */
void frob_string_free(char* s);

/* --- Endomorphism handles ------------------------------------------------ */

/* Parses an endomorphism document:
 *   {"model": "matrix", "n": 2, "scalars": "rational", "A": [[[[...]]]]}
 * (or "scalars": "poly" with a "variables" list and term-list entries).
 * FROB_EINVAL on malformed JSON or schema violations. */
frob_status frob_endo_from_json(const char* json_text, frob_endo** out);

/* Same, reading the document from a file. */
frob_status frob_endo_from_file(const char* path, frob_endo** out);

/* Builds a named family instance.  Families: "identity", "diagonal",
 * "trace" (any n, no parameters); "bipro3-1" (n=2, s), "bipro3-2" (n=2,
 * u != 0), "bipro3-3" (n=2, k != 1/2, t != 0).  Parameters are rational
 * strings in family order.  FROB_EINVAL for unknown names, wrong counts,
 * or excluded values. */
frob_status frob_endo_from_family(const char* name, int n,
                                  const char* const* params, size_t nparams,
                                  frob_endo** out);

/* The one-parameter family that admits it ("bipro3-1"), with its parameter
 * left symbolic: entries become polynomials over Q[s]. */
frob_status frob_endo_from_family_symbolic(const char* name, frob_endo** out);

/* Serializes the endomorphism back to its JSON document. */
frob_status frob_endo_to_json(const frob_endo* endo, char** out_json);

void frob_endo_free(frob_endo* endo);

/* Matrix size n, or 0 for NULL. */
int frob_endo_n(const frob_endo* endo);

/* 1 when the entries are polynomials, 0 when rational. */
int frob_endo_is_symbolic(const frob_endo* endo);

/* --- Predicates ---------------------------------------------------------- */

/* Evaluates one predicate: "selfdual", "unital", "idempotent",
 * "conv-stable", "er" (alias "exchange"), "normal", or "biprojection"
 * (hyphens and underscores interchangeable).  `lambda` optionally pins the
 * stability scalar as a rational string; symbolic endomorphisms require it
 * for conv-stable/biprojection.  On FROB_OK the predicate holds; on
 * FROB_FALSE it fails and the report carries a witness.  `out_report`
 * receives the JSON report {predicate, holds, lambda, witness, note,
 * parts} in both cases. */
frob_status frob_endo_check(const frob_endo* endo, const char* predicate,
                            const char* lambda, char** out_report);

/* --- Splitting and embedding --------------------------------------------- */

/* Splits an idempotent b as u∘v with v∘u = id, transports the Frobenius
 * structure onto the image, and verifies the embedding.  `out_bundle`
 * receives {n, rank, u, v, structure_constants, unit, counit,
 * comultiplication, issues, embedding}.  FROB_OK when the induced
 * structure passes every axiom and all embedding checks hold; FROB_FALSE
 * when b is not idempotent (no bundle) or when validation/embedding
 * checks fail (bundle records them).  FROB_EINVAL for symbolic input. */
frob_status frob_endo_split(const frob_endo* endo, char** out_bundle);

/* Forward direction: reads a span document {"n": 2, "span": [[...], ...]}
 * (each inner list one basis element over the matrix units, row-major) and
 * produces the selfdual unital exchange-relation idempotent onto its span.
 * FROB_FALSE with "<kind>: <detail>" in frob_last_error() when the span is
 * not a Frobenius subalgebra; kinds: "invalid-span", "not-closed",
 * "unit-missing", "degenerate-form", "verification-failed". */
frob_status frob_embed_span(const char* span_json, frob_endo** out);

/* --- Diagram evaluation -------------------------------------------------- */

/* Evaluates a diagram expression over M_n.  Atoms: id, m, e, delta, eps,
 * ev, coev, and #name for bound endomorphisms; operators: `g . f`
 * (composition, f first) and `f ox g` (tensor).  Bindings pair names with
 * rational endomorphism handles.
 *
 * With `expect` NULL: FROB_OK and the tensor {d, in_arity, out_arity,
 * matrix} in `out_json`.  With `expect` set: both sides are evaluated and
 * compared — FROB_OK when equal, FROB_FALSE when not; `out_json` receives
 * {equal, in_arity, out_arity, out_index, in_index, lhs, rhs, detail} with
 * the first differing coefficient located on failure.  Parse/type errors
 * (including arity mismatches, with byte offsets) are FROB_EINVAL. */
frob_status frob_eval(int n, const char* expr, const char* expect,
                      const char* const* bind_names,
                      const frob_endo* const* bind_endos, size_t nbinds,
                      char** out_json);

/* --- Claims -------------------------------------------------------------- */

/* Runs the Groebner-certified claim suite for matrix size n.  `claim` is
 * one id — "bipro-implies-er", "dimensions", "lambda-spectrum",
 * "unital-er-implies-idempotent" — or "all" for every claim applicable at
 * n.  `budget_seconds` <= 0 selects the default (600).  `out_reports`
 * receives a JSON array of {claim, status, evidence, seconds}.  FROB_OK
 * when every selected claim passes; FROB_FALSE when one fails;
 * FROB_ERESOURCE when none fail but one hit the budget. */
frob_status frob_verify_claims(int n, const char* claim, double budget_seconds,
                               char** out_reports);

/* --- Groebner bases ------------------------------------------------------ */

/* Computes the reduced Groebner basis of an ideal document {"variables",
 * "order", "generators"}.  `shuffle_seed` >= 0 permutes the generators
 * first (the reduced basis is order-independent, so the output must not
 * change).  `out_json` receives the input fields plus {basis, reduced,
 * dimension, vector_space_dimension}.  FROB_ERESOURCE on budget
 * exhaustion. */
frob_status frob_groebner(const char* ideal_json, double budget_seconds,
                          long shuffle_seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* FROBKIT_H */
