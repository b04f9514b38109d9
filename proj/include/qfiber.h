/* qfiber -- exact computations in a fibered rational structure.
 *
 * C interface to the qfiber core. Every composite value crosses the boundary
 * as text in the library's stable formats:
 *
 *   rational    "n" or "n/d", optional leading '-', always reduced
 *   element     "P(q)" for parent-line points, "C(p,q)" for fiber points
 *   term        "f(0,1,x)" over the grammar {f, 0, 1, variables}
 *   formula     "R(x,y) & !(x = 0)", connectives ! & | with psi(t) built in
 *   assignment  "x=P(0),y=C(0,1)" (structure M) or "x=1/2" (structure Q)
 *   affine form "-1*@1 + 2*x" with @0/@1 the constant atoms
 *   profile     "p:t, p:t" fiber translations; empty string is the identity
 *   certificate "TARGET<tab>KIND<tab>TEXT", KIND one of closed-term /
 *               unique-solution
 *
 * Functions return QF_OK on success. QF_PARSE_ERROR means malformed input
 * text; QF_FAIL covers semantic errors and failed checks. When a char** err
 * argument is non-NULL it receives a message on failure (free with qf_free).
 * All returned strings and handles are owned by the caller.
 */

#ifndef QFIBER_H
#define QFIBER_H

#ifndef QFIBER_API
#if defined(_WIN32)
#define QFIBER_API
#else
#define QFIBER_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf_status {
  QF_OK = 0,
  QF_FAIL = 1,       /* semantic error or failed check */
  QF_PARSE_ERROR = 2 /* malformed input text */
} qf_status;

typedef struct qf_term qf_term;
typedef struct qf_formula qf_formula;
typedef struct qf_profile qf_profile;

QFIBER_API const char* qf_version(void);
QFIBER_API void qf_free(char* s);

/* -- terms ------------------------------------------------------------- */

QFIBER_API qf_status qf_term_parse(const char* text, qf_term** out, char** err);
QFIBER_API void qf_term_free(qf_term* t);
QFIBER_API qf_status qf_term_print(const qf_term* t, char** out);

/* structure is "M" (the full structure; element assignment/result) or "Q"
 * (the parent-line reduct; rational assignment/result). */
QFIBER_API qf_status qf_eval_term(const qf_term* t, const char* structure,
                                  const char* assignment, char** out, char** err);
QFIBER_API qf_status qf_normalize_term(const qf_term* t, char** out, char** err);

/* -- formulas ---------------------------------------------------------- */

QFIBER_API qf_status qf_formula_parse(const char* text, qf_formula** out, char** err);
QFIBER_API void qf_formula_free(qf_formula* f);
QFIBER_API qf_status qf_formula_print(const qf_formula* f, char** out);

/* evaluates over the full structure M; *value receives 0 or 1 */
QFIBER_API qf_status qf_eval_formula(const qf_formula* f, const char* assignment, int* value,
                                     char** err);

/* exact solution set in the target variable, e.g. "finite {1/2}" or
 * "cofinite {0, 1}". params binds the remaining free variables to rationals. */
QFIBER_API qf_status qf_classify(const qf_formula* f, const char* target, const char* params,
                                 char** out, char** err);

/* -- definability certificates ----------------------------------------- */

QFIBER_API qf_status qf_define_integer(const char* n, char** certificate_line, char** err);
/* text is "k" or "k/n" with n >= 1, read verbatim (no reduction) */
QFIBER_API qf_status qf_define_rational(const char* text, char** certificate_line, char** err);
QFIBER_API qf_status qf_certificate_describe(const char* certificate_line, char** out,
                                             char** err);
/* QF_OK when the certificate re-verifies; QF_FAIL with a diagnostic when not */
QFIBER_API qf_status qf_certificate_verify(const char* certificate_line, char** diagnostic,
                                           char** err);

/* -- automorphism profiles --------------------------------------------- */

QFIBER_API qf_status qf_profile_parse(const char* text, qf_profile** out, char** err);
QFIBER_API void qf_profile_free(qf_profile* p);
QFIBER_API qf_status qf_profile_print(const qf_profile* p, char** out);
QFIBER_API qf_status qf_profile_apply(const qf_profile* p, const char* element, char** out,
                                      char** err);
QFIBER_API qf_status qf_profile_compose(const qf_profile* first_applied,
                                        const qf_profile* then_applied, qf_profile** out);
QFIBER_API qf_status qf_profile_invert(const qf_profile* p, qf_profile** out);

/* runs the exhaustive grid check; *report receives the pass/fail text either
 * way, QF_FAIL signals a failed check. extra_parents ("p, p") may be NULL. */
QFIBER_API qf_status qf_check_automorphism(const qf_profile* p, const char* extra_parents,
                                           char** report, char** err);

/* reads the translation profile off a black-box element map. The callback
 * receives an element text and must return QF_OK and a malloc'd element text
 * through out (ownership passes to qfiber). probes is a "p, p" list. */
typedef qf_status (*qf_element_map_fn)(void* context, const char* element, char** out);
QFIBER_API qf_status qf_extract_profile(qf_element_map_fn map, void* context,
                                        const char* probes, qf_profile** out, char** err);

/* -- metrics and escape witnesses -------------------------------------- */

QFIBER_API qf_status qf_product_metric(const qf_profile* g, const qf_profile* h, char** out,
                                       char** err);
QFIBER_API qf_status qf_augmented_metric(const char* j, const qf_profile* g,
                                         const qf_profile* h, char** out, char** err);

/* support is a "p, p" list stabilized pointwise; coset ("p:t, p:t", may be
 * NULL) prescribes nonzero translations. Output is the four-line block
 * "g: ...\nh: ...\nj: ...\ndistance: ...". */
QFIBER_API qf_status qf_escape_witness(const char* support, const char* coset,
                                       const char* bound, char** out, char** err);

/* -- isomorphism extension --------------------------------------------- */

/* extends x -> slope*x + intercept to the whole structure with the constant
 * basepoint choice (NULL basepoint means 0) and applies it to one element */
QFIBER_API qf_status qf_extend_iso(const char* slope, const char* intercept,
                                   const char* basepoint, const char* element, char** out,
                                   char** err);
/* checks the same extension on the standard all-cases grid */
QFIBER_API qf_status qf_check_reduct_iso(const char* slope, const char* intercept,
                                         const char* basepoint, char** report, char** err);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QFIBER_H */
