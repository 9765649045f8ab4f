/* C interface to the numap library.
 *
 * Every function returns a numap_status; results are NUL-terminated JSON
 * strings allocated by the library and released with numap_free. Opaque
 * handles own parsed values and are released with their _free function.
 * All values are immutable once created, so handles may be shared across
 * threads; the error detail string is thread-local.
 *
 * Integers inside JSON payloads are decimal strings; multiplicity vectors
 * and ranks are JSON naturals. See the README for the full schemas.
 */
#ifndef NUMAP_C_H
#define NUMAP_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum numap_status {
    NUMAP_OK = 0,
    NUMAP_ERR_PARSE = 1,       /* malformed input */
    NUMAP_ERR_RANK = 2,        /* rank or degree mismatch */
    NUMAP_ERR_NONINTEGRAL = 3, /* conversion left non-integer coefficients */
    NUMAP_ERR_VERIFY = 4,      /* a checked identity or report failed */
    NUMAP_ERR_INTERNAL = 5
} numap_status;

typedef struct numap_table numap_table;   /* coefficient table, either basis */
typedef struct numap_oracle numap_oracle; /* polynomial map oracle */

/* ---- handles ---- */

numap_status numap_table_parse(const char* json, numap_table** out);
numap_status numap_table_to_json(const numap_table* t, char** out);
void numap_table_free(numap_table* t);

numap_status numap_oracle_parse(const char* json, numap_oracle** out);
void numap_oracle_free(numap_oracle* o);

/* ---- map calculus ---- */

/* vectors_json: array of vectors; prints the deviation vector. */
numap_status numap_deviate(const numap_oracle* o, const char* vectors_json,
                           char** out);

/* Coefficient table of the oracle at degree bound `degree`. */
numap_status numap_extract(const numap_oracle* o, unsigned degree,
                           numap_table** out);

/* Evaluation of a table over the named algebra ("Z", "Z^2", "IntZ") at a
 * point given as an array of algebra elements. */
numap_status numap_eval(const numap_table* t, const char* algebra,
                        const char* point_json, char** out);

/* Sample-based degree verification. options_json may be NULL or an object
 * {"seed": u64, "range": [lo, hi]}. Returns NUMAP_ERR_VERIFY when the
 * report (always written) lists violations. */
numap_status numap_verify(const numap_oracle* o, unsigned degree,
                          const char* options_json, char** report_out);

/* Scalar and deviation characterization identities. Both sides are written
 * as {"lhs":..., "rhs":..., "equal":...}; unequal sides give
 * NUMAP_ERR_VERIFY. */
numap_status numap_eq1(const numap_oracle* o, unsigned degree, const char* r_dec,
                       const char* x_json, char** out);
numap_status numap_eq2(const numap_oracle* o, unsigned degree,
                       const char* scalars_json, const char* vectors_json,
                       char** out);

/* Basis conversion. Monomial input becomes a binomial table; binomial input
 * becomes a monomial table, with NUMAP_ERR_NONINTEGRAL (and a rational
 * table in *out) when no integral monomial table exists. */
numap_status numap_convert(const numap_table* t, char** out);

/* ---- augmentation model ---- */

/* The factorization of a binomial table through the truncated polynomial
 * model: the basis assignment t^X -> v_X. */
numap_status numap_universal(const numap_table* t, char** out);

/* chi([x]) in Z[t_1..t_k]/J_n for x given as a vector. */
numap_status numap_chi(const char* x_json, unsigned truncation, char** out);

/* ---- naturality ---- */

/* hom: "id", "id:<algebra>", "ev:<a>", "diag", "proj:<i>". points_json may
 * be NULL, in which case deterministic points are drawn from the source
 * algebra's samples. Mismatching squares give NUMAP_ERR_VERIFY. */
numap_status numap_naturality(const numap_table* t, const char* hom,
                              const char* points_json, char** report_out);

/* Rational monomial forms of x -> C(x,2) (non-integral) and x -> x^2
 * (integral control) in a degree window >= 2. */
numap_status numap_demo_counterexample(unsigned degree, char** out);

/* Exhaustive binomial-lemma sweep plus seeded eq1/eq2 random instances.
 * options_json as in numap_verify. Failures give NUMAP_ERR_VERIFY. */
numap_status numap_identities(const char* options_json, char** report_out);

/* ---- utilities ---- */

void numap_free(char* s);
const char* numap_status_name(numap_status s);
/* Detail message for the most recent failure on this thread. */
const char* numap_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* NUMAP_C_H */
