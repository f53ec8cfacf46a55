/* ringrep: exact workbench for representations of integral domains.
 *
 * C API over the C++ core. All objects are opaque handles created and
 * destroyed through these functions; every fallible call returns a
 * ringrep_status and leaves a detail message in ringrep_last_error().
 * Strings returned through char** out-parameters are heap allocated and
 * must be released with ringrep_string_free().
 */
#ifndef RINGREP_H
#define RINGREP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ringrep_status {
    RINGREP_OK = 0,
    RINGREP_ERR_ARGUMENT = 1,         /* invalid value / precondition violation */
    RINGREP_ERR_PARSE = 2,            /* text does not match a grammar */
    RINGREP_ERR_RING_MISMATCH = 3,    /* operands from different rings */
    RINGREP_ERR_UNSUPPORTED = 4,      /* not available for this ring / scale */
    RINGREP_ERR_SEARCH_EXHAUSTED = 5, /* bounded search found nothing */
    RINGREP_ERR_INTERNAL = 6
} ringrep_status;

typedef enum ringrep_verdict {
    RINGREP_VERDICT_PASS = 0,
    RINGREP_VERDICT_FAIL = 1,
    RINGREP_VERDICT_INCONCLUSIVE = 2
} ringrep_verdict;

typedef struct ringrep_ring ringrep_ring;
typedef struct ringrep_word ringrep_word;
typedef struct ringrep_normal_form ringrep_normal_form;
typedef struct ringrep_report ringrep_report;
typedef struct ringrep_model ringrep_model;

const char *ringrep_version(void);
const char *ringrep_status_name(ringrep_status status);
/* detail of the most recent failure on the calling thread */
const char *ringrep_last_error(void);
void ringrep_string_free(char *s);

/* Rings. selector: z | zi | fp:<p> | fpx:<p> | q:<selector>. */
ringrep_status ringrep_ring_create(const char *selector, ringrep_ring **out);
void ringrep_ring_destroy(ringrep_ring *ring);
ringrep_status ringrep_ring_name(const ringrep_ring *ring, char **out);

/* Words: `u[<elem>]` / `s[<elem>]` joined by `*`; "" is the identity. */
ringrep_status ringrep_word_parse(const ringrep_ring *ring, const char *text, ringrep_word **out);
void ringrep_word_destroy(ringrep_word *word);
ringrep_status ringrep_word_format(const ringrep_word *word, char **out);
ringrep_status ringrep_word_normalize(const ringrep_word *word, ringrep_normal_form **out);

void ringrep_normal_form_destroy(ringrep_normal_form *nf);
ringrep_status ringrep_normal_form_mult(const ringrep_normal_form *nf, char **out);
ringrep_status ringrep_normal_form_trans(const ringrep_normal_form *nf, char **out);
ringrep_status ringrep_normal_form_format(const ringrep_normal_form *nf, char **out);
/* Affine action mult*q + trans. A point containing '/' is read in the
 * fraction field and the form acts there through its embedding. */
ringrep_status ringrep_normal_form_act(const ringrep_normal_form *nf, const char *point,
                                       char **out);

/* Reports (structured, deterministic key/value text). */
void ringrep_report_destroy(ringrep_report *report);
ringrep_verdict ringrep_report_verdict(const ringrep_report *report);
ringrep_status ringrep_report_render(const ringrep_report *report, char **out);
/* cls: "verified" | "violated" | "inconclusive" */
unsigned long ringrep_report_count(const ringrep_report *report, const char *cls);
ringrep_status ringrep_report_value(const ringrep_report *report, const char *key, char **out);

/* Relation checks on a basis window.
 * relation: mul-s | add-u | covariance | isometry | unit-unitarity | compression
 * params: comma separated k=v pairs with element literals, e.g. "r=2,n=1,window=10".
 *   window: interval bound for z, box bound for zi, degree bound for fpx
 *           (ignored for fp; the whole field is used).
 *   compression (ring z only): r= or n=, inner=<bound>, magnitude=, den=. */
ringrep_status ringrep_check(const ringrep_ring *ring, const char *relation, const char *params,
                             ringrep_report **out);

/* Orbits of the unit group of Z/m acting by multiplication (dual action). */
ringrep_status ringrep_orbits(unsigned long modulus, ringrep_report **out);
/* Block structure of the affine group algebra of F_p (p prime, <= 31). */
ringrep_status ringrep_decompose(unsigned long p, unsigned long seed, ringrep_report **out);
/* Non-generation witness for M(Z) or M(F_p[x]); gens as comma separated literals. */
ringrep_status ringrep_witness(const ringrep_ring *ring, const char *gens_csv, unsigned long bound,
                               ringrep_report **out);

/* Cyclic unitary models on Z/m. */
ringrep_status ringrep_model_create(unsigned long m, ringrep_model **out);
void ringrep_model_destroy(ringrep_model *model);
ringrep_status ringrep_model_verify(const ringrep_model *model, ringrep_report **out);
/* kind: 's' or 'u'. Writes the permutation in one-line image notation. */
ringrep_status ringrep_model_extend(const ringrep_model *model, const char *fraction, char kind,
                                    char **out);
/* Quotient relations + factorization over all admissible fractions with
 * |num|, den <= bound. */
ringrep_status ringrep_model_quotient_check(const ringrep_model *model, unsigned long bound,
                                            unsigned long seed, ringrep_report **out);

/* Two-dimensional nest representation checks. x: irreducible literal;
 * theta: rational like 1/3 or decimal like 0.3. */
ringrep_status ringrep_nest_check(const ringrep_ring *ring, const char *x, const char *theta,
                                  unsigned long pairs, unsigned long seed, ringrep_report **out);

/* Covariance orientation of the l2(X,S) construction for a dynamical system
 * in the plain-text format ("X: n" header, then "name: x->y ..." lines). */
ringrep_status ringrep_cov_orientation(const char *system_text, unsigned long truncation,
                                       ringrep_report **out);
/* Orientation of the ring regular representation on dual indices mod m. */
ringrep_status ringrep_cov_ring_model(unsigned long modulus, unsigned long r,
                                      ringrep_report **out);

#ifdef __cplusplus
}
#endif

#endif /* RINGREP_H */
