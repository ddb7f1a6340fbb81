/* spectrumkit: deciders, characteristic formulae, and primality verdicts for
 * the linear-time/branching-time spectrum over finite tree processes.
 *
 * Every operation returns a status code:
 *   0  success; for boolean queries the answer is "holds"
 *   1  the operation ran and the answer is negative (does not hold, formula
 *      inconsistent or non-prime, verification suite found violations)
 *   2  parse or usage error (bad term, bad formula, formula outside the
 *      semantics' grammar, unknown name)
 *   3  a configured budget was exceeded (class cap, basis cap)
 *   4  internal invariant violation; indicates a bug, please report it
 *
 * Functions with a char** out parameter allocate the result with malloc;
 * release it with sk_string_free. On nonzero status *out may still carry a
 * partial report or be NULL; sk_last_error keeps the failure message.
 * A context is internally locked, so calls on one context are serialized.
 */
#ifndef SPECTRUMKIT_H
#define SPECTRUMKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sk_ctx sk_ctx;

/* alphabet_csv names the actions, comma separated ("a,b"). NULL on a bad
 * alphabet (empty, duplicate names, more than 32 actions). */
sk_ctx* sk_ctx_create(const char* alphabet_csv);
void sk_ctx_destroy(sk_ctx* cx);

/* Cap on enumerated bisimulation classes per universe (default 100000). */
int sk_ctx_set_class_cap(sk_ctx* cx, long cap);
/* Seed for the randomized verification suites (default 1). */
int sk_ctx_set_seed(sk_ctx* cx, unsigned long long seed);

/* Message for the most recent failing call on cx; valid until the next call. */
const char* sk_last_error(sk_ctx* cx);
void sk_string_free(char* s);

/* p ≼_X q. 0 holds, 1 does not hold (*out names a failing clause or a
 * distinguishing observation). */
int sk_check(sk_ctx* cx, const char* sem, const char* p, const char* q,
             int as_json, char** out);

/* p ≡_X q (both directions). */
int sk_equiv(sk_ctx* cx, const char* sem, const char* p, const char* q,
             int as_json, char** out);

/* Characteristic formula of p; JSON form also carries the anti-characteristic
 * formula and the basis size. */
int sk_chi(sk_ctx* cx, const char* sem, const char* p, int as_json,
           char** out);

/* Anti-characteristic formula of p. */
int sk_barchi(sk_ctx* cx, const char* sem, const char* p, int as_json,
              char** out);

/* Model check p against formula. sem may be NULL or "" to skip the grammar
 * membership test; when given, a formula outside the grammar is status 2.
 * 0 satisfied, 1 not satisfied. */
int sk_mc(sk_ctx* cx, const char* sem, const char* p, const char* formula,
          int as_json, char** out);

/* Split the formula's model set as clos(pivot) plus a remainder. depth < 0
 * bounds the model search by the formula's modal depth. 0 on a split or an
 * already characteristic formula, 1 if inconsistent. */
int sk_decompose(sk_ctx* cx, const char* sem, const char* formula, int depth,
                 int as_json, char** out);

/* Primality verdict. 0 characteristic, 1 inconsistent or non-prime (the
 * report carries the witnesses). depth as in sk_decompose. */
int sk_verdict(sk_ctx* cx, const char* sem, const char* formula, int depth,
               int as_json, char** out);

/* Comparison matrix for all twenty-one semantics on one pair. Always 0 on
 * well-formed input. */
int sk_spectrum(sk_ctx* cx, const char* p, const char* q, int as_json,
                char** out);

/* One canonical representative per bisimulation class of depth <= depth. */
int sk_enumerate(sk_ctx* cx, int depth, int as_json, char** out);

/* Run one verification suite (see sk_verify_suites). sem may be NULL/"" for
 * all semantics the suite covers; samples <= 0 picks the suite's default
 * volume. 0 pass, 1 violations found. */
int sk_verify(sk_ctx* cx, const char* suite, const char* sem, long samples,
              int as_json, char** out);

/* Newline-separated list of suite names. */
int sk_verify_suites(char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRUMKIT_H */
