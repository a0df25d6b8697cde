/* gradedk: graded K-theory of graph C*-algebras and P-graph combinatorics.
 *
 * C interface to the core library. Every computation takes an opaque context
 * (which carries the last error message), input as JSON text where the input
 * is structured, and writes a freshly allocated NUL-terminated result string
 * to *out on success. Free results with gk_string_free. On failure *out is
 * left untouched, a status code is returned, and a human-readable message is
 * available from gk_ctx_error until the next call on the same context.
 *
 * Contexts are not thread-safe; use one per thread. The library itself keeps
 * no global mutable state.
 */

#ifndef GRADEDK_H
#define GRADEDK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gk_ctx gk_ctx;

typedef enum gk_status {
  GK_OK = 0,
  GK_ERR_PARSE = 1,       /* malformed JSON or schema violation */
  GK_ERR_INVALID = 2,     /* structurally valid input that fails validation */
  GK_ERR_HYPOTHESIS = 3,  /* formula hypotheses violated and force not set */
  GK_ERR_UNSUPPORTED = 4, /* request outside supported bounds */
  GK_ERR_INTERNAL = 5
} gk_status;

/* Option bits accepted by every computation. */
enum {
  GK_OPT_JSON = 1,    /* machine-readable output mirroring the JSON schemas */
  GK_OPT_FORCE = 2,   /* evaluate formulas outside their stated hypotheses */
  GK_OPT_VERBOSE = 4  /* include witnesses (SNF transforms U and V) */
};

gk_ctx* gk_ctx_new(void);
void gk_ctx_free(gk_ctx* ctx);
const char* gk_ctx_error(const gk_ctx* ctx);
const char* gk_status_name(gk_status s);
const char* gk_version(void);
void gk_string_free(char* s);

/* Graded K-theory of a 1-graph with a Z_2 edge labelling ("delta" field,
 * default 0). Exit data: k0 = coker, k1 = ker of 1 - A^t. */
gk_status gk_kgr_graph(gk_ctx* ctx, const char* graph_json, unsigned opts, char** out);

/* Same with the labelling forced to zero: classical K-theory. */
gk_status gk_ungraded_k(gk_ctx* ctx, const char* graph_json, unsigned opts, char** out);

/* Bouquet with `odd` loops labelled 1 and `even` labelled 0. */
gk_status gk_cuntz(gk_ctx* ctx, long odd, long even, unsigned opts, char** out);

/* K^gr of the n-th complex Clifford algebra. */
gk_status gk_clifford(gk_ctx* ctx, long n, unsigned opts, char** out);

/* Degree shift of a pair {"k0":group,"k1":group}, iterated `times`. */
gk_status gk_shift_cl1(gk_ctx* ctx, const char* pair_json, long times, unsigned opts,
                       char** out);

/* Crossed product by the grading automorphism: same component swap. */
gk_status gk_crossed_z2(gk_ctx* ctx, const char* pair_json, unsigned opts, char** out);

/* Graded Pimsner-Voiculescu solver. Input: {"g0","g1","alpha0","alpha1",
 * "gamma0","gamma1","k"} with presentations, matrices or "id", and k in
 * {0,1}. Output: the two extensions. */
gk_status gk_pv_solve(gk_ctx* ctx, const char* problem_json, unsigned opts, char** out);

/* Smith normal form of {"rows","cols","entries"}. */
gk_status gk_snf(gk_ctx* ctx, const char* matrix_json, unsigned opts, char** out);

/* Stationary direct limit of {"group": presentation, "endo": matrix}. */
gk_status gk_stationary_limit(gk_ctx* ctx, const char* limit_json, unsigned opts,
                              char** out);

/* Exhaustive cocycle check for the built-in kappa on Z_2^l. */
gk_status gk_verify_kappa(gk_ctx* ctx, long l, unsigned opts, char** out);

/* Exhaustive cocycle check for a user table {"l","values"} (values additive
 * 0/1, or multiplicative +1/-1). */
gk_status gk_verify_cocycle_table(gk_ctx* ctx, const char* table_json, unsigned opts,
                                  char** out);

/* Brute-force coboundary between two tables (l <= 4). Finding none is a
 * result, not an error. */
gk_status gk_find_coboundary(gk_ctx* ctx, const char* c1_json, const char* c2_json,
                             unsigned opts, char** out);

/* Cartesian product of two P-graph presentations
 * {"skeleton":...,"action":...}. */
gk_status gk_graph_product(gk_ctx* ctx, const char* a_json, const char* b_json,
                           unsigned opts, char** out);

/* Structure decomposition of a finite category table into a skeleton and a
 * Z_2^l action. */
gk_status gk_decompose(gk_ctx* ctx, const char* table_json, unsigned opts, char** out);

/* Vertex potential test: does the labelling come from a potential, making
 * the grading inner? */
gk_status gk_check_inner(gk_ctx* ctx, const char* graph_json, unsigned opts, char** out);

/* Validate a k-graph skeleton, a P-graph presentation, or a 1-graph file;
 * diagnostics are reported in the output, not as an error status. */
gk_status gk_validate(gk_ctx* ctx, const char* json_text, unsigned opts, char** out);

/* Run the worked-examples gallery; one PASS/FAIL line per entry. *failures
 * (optional) receives the number of failing entries. */
gk_status gk_gallery(gk_ctx* ctx, unsigned opts, int* failures, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRADEDK_H */
