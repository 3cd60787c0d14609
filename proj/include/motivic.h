/* C API for the motivic class engine.
 *
 * All entry points return an mtc_status; results come back through out
 * parameters. Strings returned through `char**` are heap-allocated and must
 * be released with mtc_string_free(); scalars with mtc_scalar_destroy().
 * On any non-OK status, mtc_engine_last_error() describes the failure.
 */
#ifndef MOTIVIC_H
#define MOTIVIC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mtc_engine mtc_engine;
typedef struct mtc_scalar mtc_scalar;

typedef enum mtc_status {
    MTC_OK = 0,
    MTC_ERR_ARGUMENT = 1, /* malformed input: puncture spec, word, prime, name */
    MTC_ERR_MATH = 2,     /* pole, inverse of zero, singular matrix */
    MTC_ERR_MISMATCH = 3, /* a verification found mismatches; report produced */
    MTC_ERR_INTERNAL = 4  /* internal invariant violated */
} mtc_status;

typedef enum mtc_format {
    MTC_FORMAT_TEXT = 0,
    MTC_FORMAT_LATEX = 1,
    MTC_FORMAT_JSON = 2
} mtc_format;

typedef enum mtc_method {
    MTC_METHOD_TQFT = 0,  /* matrix composition of the reduced tubes */
    MTC_METHOD_CLOSED = 1 /* closed-form polynomial */
} mtc_method;

typedef enum mtc_variant {
    MTC_VARIANT_SECTION5 = 0,
    MTC_VARIANT_INTRO = 1
} mtc_variant;

/* Builds the operator set and runs its startup identity checks. */
mtc_status mtc_engine_create(mtc_engine** out);
void mtc_engine_destroy(mtc_engine* e);

/* Message for the most recent failure on this engine; valid until the next
 * call on the same engine. Position of the most recent parse failure, or -1. */
const char* mtc_engine_last_error(const mtc_engine* e);
long mtc_engine_last_error_position(const mtc_engine* e);

const char* mtc_version(void);
void mtc_string_free(char* s);

/* --- virtual classes ----------------------------------------------------- */

/* Punctures use the mini-grammar "jp:1,mi:2"; empty string = none. */
mtc_status mtc_class_value(mtc_engine* e, unsigned genus, const char* punctures,
                           mtc_method method, mtc_variant variant, mtc_scalar** out);

void mtc_scalar_destroy(mtc_scalar* s);
mtc_status mtc_scalar_render(mtc_engine* e, const mtc_scalar* s, mtc_format f, char** out);
int mtc_scalar_is_polynomial(const mtc_scalar* s);
int mtc_scalar_equal(const mtc_scalar* a, const mtc_scalar* b);
/* Exact rational value at q = point, rendered "n" or "n/d". */
mtc_status mtc_scalar_eval_at(mtc_engine* e, const mtc_scalar* s, long point, char** out);

/* --- operator matrices --------------------------------------------------- */

/* op is one of: l, jp, jm, mi, eta, eta-inv, sigma, zg-l. */
mtc_status mtc_operator_render(mtc_engine* e, const char* op, mtc_format f, char** out);

/* --- bordism words ------------------------------------------------------- */

mtc_status mtc_word_eval(mtc_engine* e, const char* word, mtc_scalar** out);
mtc_status mtc_word_canonical(mtc_engine* e, const char* word, char** out);

/* --- finite-field oracle ------------------------------------------------- */

/* Decimal count of solutions of the surface relation in SL(2, F_prime). */
mtc_status mtc_count_solutions(mtc_engine* e, unsigned genus, const char* punctures,
                               long prime, char** out_count);

/* --- verification and adjudication --------------------------------------- */

/* Cross-method and oracle grid; primes_csv like "3,5" (may be empty).
 * Returns MTC_ERR_MISMATCH (with the report still written) if any record
 * fails; out_all_pass may be NULL. */
mtc_status mtc_verify(mtc_engine* e, unsigned max_genus, unsigned max_punctures,
                      const char* primes_csv, mtc_format f, char** out_report,
                      int* out_all_pass);

/* Closed-form conventions vs the matrix pipeline for one surface.
 * out_section5_matches may be NULL. */
mtc_status mtc_adjudicate(mtc_engine* e, unsigned genus, const char* punctures, mtc_format f,
                          char** out_report, int* out_section5_matches);

#ifdef __cplusplus
}
#endif

#endif /* MOTIVIC_H */
