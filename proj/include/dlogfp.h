/* dlogfp - discrete logarithm toolkit for the multiplicative group F_p*.
 *
 * C interface to the shared library. All group elements, exponents and
 * moduli are uint64_t values below 2^63. Functions that can fail return
 * a dlogfp_status; out-parameters are written only on DLOGFP_OK.
 * Handles (dlogfp_ctx, dlogfp_trace) are opaque and must be released
 * with the matching *_free call. A context is immutable once created
 * and may be shared across threads; solves are reentrant.
 */

#ifndef DLOGFP_H
#define DLOGFP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DLOGFP_BUILD)
#    define DLOGFP_API __declspec(dllexport)
#  else
#    define DLOGFP_API __declspec(dllimport)
#  endif
#else
#  define DLOGFP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dlogfp_status {
    DLOGFP_OK = 0,
    DLOGFP_ERR_INVALID_ARGUMENT = 1,   /* null pointer or out-of-range scalar */
    DLOGFP_ERR_DOMAIN = 2,             /* zero modulus, non-invertible element, overflow */
    DLOGFP_ERR_COMPOSITE_MODULUS = 3,  /* p failed the primality test */
    DLOGFP_ERR_FACTORIZATION_MISMATCH = 4, /* factors do not multiply to p-1 */
    DLOGFP_ERR_NOT_GENERATOR = 5,      /* g does not generate F_p* */
    DLOGFP_ERR_NOT_IN_GROUP = 6,       /* element outside [1, p) */
    DLOGFP_ERR_NOT_FOUND = 7,          /* subgroup search exhausted */
    DLOGFP_ERR_INTERNAL = 8            /* self-check failed / allocation failure */
} dlogfp_status;

typedef enum dlogfp_method {
    DLOGFP_METHOD_TRACEBACK = 0, /* root-descent along the trace stack */
    DLOGFP_METHOD_POHLIG = 1     /* per-prime-power digits + CRT */
} dlogfp_method;

/* Short identifier for a status code, e.g. "not_generator". */
DLOGFP_API const char* dlogfp_status_name(dlogfp_status status);

/* Human-readable detail of the most recent failure on this thread.
 * Valid until the next dlogfp_* call on the same thread. */
DLOGFP_API const char* dlogfp_last_error(void);

DLOGFP_API const char* dlogfp_version(void);

/* ---- scalar helpers ---------------------------------------------- */

DLOGFP_API dlogfp_status dlogfp_mulmod(uint64_t a, uint64_t b, uint64_t m,
                                       uint64_t* out);
DLOGFP_API dlogfp_status dlogfp_powmod(uint64_t a, uint64_t e, uint64_t m,
                                       uint64_t* out);
DLOGFP_API dlogfp_status dlogfp_invmod(uint64_t a, uint64_t m, uint64_t* out);

/* 1 if n is prime, 0 otherwise. Exact for all n < 2^63. */
DLOGFP_API int dlogfp_is_prime(uint64_t n);

/* Prime factorization of n >= 1. Writes up to cap distinct primes in
 * ascending order with their multiplicities and sets *count to the
 * number of distinct primes; fails with DLOGFP_ERR_INVALID_ARGUMENT
 * (leaving *count at the required size) when cap is too small.
 * 63 slots always suffice. */
DLOGFP_API dlogfp_status dlogfp_factorize(uint64_t n, uint64_t* primes,
                                          uint32_t* exponents, size_t cap,
                                          size_t* count);

/* ---- validated group context -------------------------------------- */

typedef struct dlogfp_ctx dlogfp_ctx;

/* Validates p prime, g a generator, and factors p-1 internally. */
DLOGFP_API dlogfp_status dlogfp_ctx_create(uint64_t p, uint64_t g,
                                           dlogfp_ctx** out);

/* Same, with a caller-supplied factorization of p-1 ({prime, exponent}
 * pairs). The product is checked against p-1. */
DLOGFP_API dlogfp_status dlogfp_ctx_create_with_factors(
    uint64_t p, uint64_t g, const uint64_t* primes, const uint32_t* exponents,
    size_t count, dlogfp_ctx** out);

DLOGFP_API void dlogfp_ctx_free(dlogfp_ctx* ctx);

DLOGFP_API uint64_t dlogfp_ctx_prime(const dlogfp_ctx* ctx);
DLOGFP_API uint64_t dlogfp_ctx_generator(const dlogfp_ctx* ctx);

/* Distinct primes of p-1, ascending. */
DLOGFP_API size_t dlogfp_ctx_factor_count(const dlogfp_ctx* ctx);
DLOGFP_API dlogfp_status dlogfp_ctx_factor(const dlogfp_ctx* ctx, size_t index,
                                           uint64_t* prime, uint32_t* exponent);

/* ---- solving ------------------------------------------------------- */

/* Finds x in [0, p-1) with g^x = h (mod p). The result is verified by a
 * final exponentiation before it is returned. */
DLOGFP_API dlogfp_status dlogfp_solve(const dlogfp_ctx* ctx, uint64_t h,
                                      dlogfp_method method, uint64_t* x);

/* One intermediate step of a solve. For the trace-back method: the root
 * taken (factor), the coset index k, the generator exponent after the
 * step (gpow), the plain root delta = g^(gpow before/factor), and the
 * stack element matched. For the baseline: one digit round, with
 * factor = q, k = the digit, gpow = the partial residue, delta = the
 * order-q subgroup generator and target = the projected element. */
typedef struct dlogfp_stage {
    uint64_t factor;
    uint64_t k;
    uint64_t gpow;
    uint64_t delta;
    uint64_t target;
} dlogfp_stage;

typedef struct dlogfp_trace dlogfp_trace;

/* As dlogfp_solve, additionally returning per-step diagnostics. */
DLOGFP_API dlogfp_status dlogfp_solve_traced(const dlogfp_ctx* ctx, uint64_t h,
                                             dlogfp_method method, uint64_t* x,
                                             dlogfp_trace** trace);

DLOGFP_API void dlogfp_trace_free(dlogfp_trace* trace);

/* Trace stack [h, h^f1, ..., 1]; size 0 for the baseline method. */
DLOGFP_API size_t dlogfp_trace_stack_size(const dlogfp_trace* trace);
DLOGFP_API dlogfp_status dlogfp_trace_stack_at(const dlogfp_trace* trace,
                                               size_t index, uint64_t* elem);

DLOGFP_API size_t dlogfp_trace_stage_count(const dlogfp_trace* trace);
DLOGFP_API dlogfp_status dlogfp_trace_stage_at(const dlogfp_trace* trace,
                                               size_t index, dlogfp_stage* out);

/* Per-prime-power congruences x = r (mod q^e); count 0 for trace-back. */
DLOGFP_API size_t dlogfp_trace_congruence_count(const dlogfp_trace* trace);
DLOGFP_API dlogfp_status dlogfp_trace_congruence_at(const dlogfp_trace* trace,
                                                    size_t index,
                                                    uint64_t* remainder,
                                                    uint64_t* modulus);

#ifdef __cplusplus
}
#endif

#endif /* DLOGFP_H */
