#ifndef BINOMIAL_C_H
#define BINOMIAL_C_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes (also used as CLI exit codes). */
#define BN_OK 0        /* success, all verdicts pass */
#define BN_EVERDICT 1  /* a mathematical verdict failed: signals a bug */
#define BN_EPARSE 2    /* unparseable input */
#define BN_EDOMAIN 3   /* invalid input domain (bounds, reducible minpoly, ...) */
#define BN_EINTERNAL 4 /* unexpected internal failure */

typedef struct bn_ctx bn_ctx;

bn_ctx* bn_ctx_new(void);
void bn_ctx_free(bn_ctx* ctx);

/* Options: "seed" (decimal uint64), "group_bound", "degree_bound",
 * "timing" (0/1; adds a timing_ms field to reports when 1). */
int bn_ctx_set_option(bn_ctx* ctx, const char* key, const char* value);

/* Message for the most recent failing call on this context. */
const char* bn_ctx_last_error(const bn_ctx* ctx);

const char* bn_version(void);

/* Frees strings returned through out_json. */
void bn_free_string(char* s);

/* Every operation writes a JSON report (deterministic: sorted keys) to
 * *out_json on success AND on verdict failure; *out_json is NULL on
 * parse/domain/internal errors. */

/* Minimal irreducible-factor degree of t^n - alpha over K. field_minpoly is
 * a polynomial in x (NULL or "rational" for K = Q); alpha is a rational
 * number (over Q) or a polynomial in x (over an extension). */
int bn_lambda(bn_ctx* ctx, const char* field_minpoly, const char* alpha_text, long n,
              char** out_json);

/* n-Hartley decision for delta (polynomial in t). witness: optional
 * polynomial g in t to verify against the defining product identity.
 * pair_m/pair_n: when both nonzero, also check Hartley multiplicativity for
 * the coprime pair. */
int bn_hartley(bn_ctx* ctx, const char* delta_text, long n, const char* witness,
               long pair_m, long pair_n, char** out_json);

/* Exhaustive subgroup verification of the orbit divisibility theorem for
 * every n in [n_min, n_max]. do_crt adds the coprime-split orbit relations;
 * do_prime_power adds the fixed-point construction checks on odd prime
 * powers. */
int bn_verify_group(bn_ctx* ctx, long n_min, long n_max, int do_crt, int do_prime_power,
                    char** out_json);

/* Splitting field of t^n - alpha (alpha rational), its automorphism group as
 * a subgroup of U(n), and the cross-check against the factorization path. */
int bn_galois(bn_ctx* ctx, const char* alpha_text, long n, char** out_json);

/* Alexander polynomial of the (p,q) torus knot. */
int bn_knots_torus(bn_ctx* ctx, long p, long q, char** out_json);

/* The degree-960 cable example with its asserted Hartley verdicts. */
int bn_knots_sakuma(bn_ctx* ctx, char** out_json);

/* Hartley table for a knot family ("torus" only) for n = 1..nmax,
 * cross-checked against the coprimality rule. */
int bn_knots_table(bn_ctx* ctx, const char* family, long p, long q, long nmax,
                   char** out_json);

#ifdef __cplusplus
}
#endif

#endif
