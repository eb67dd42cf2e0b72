#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "dlogfp.h"

TEST_CASE("version and status names") {
    CHECK(dlogfp_version() != nullptr);
    CHECK(std::string(dlogfp_status_name(DLOGFP_OK)) == "ok");
    CHECK(std::string(dlogfp_status_name(DLOGFP_ERR_NOT_GENERATOR)) == "not_generator");
    CHECK(std::string(dlogfp_status_name(DLOGFP_ERR_NOT_FOUND)) == "not_found");
}

TEST_CASE("scalar helpers") {
    std::uint64_t out = 0;
    CHECK(dlogfp_mulmod(10, 37, 41, &out) == DLOGFP_OK);
    CHECK(out == 1);
    CHECK(dlogfp_powmod(13, 18, 41, &out) == DLOGFP_OK);
    CHECK(out == 8);
    CHECK(dlogfp_invmod(10, 41, &out) == DLOGFP_OK);
    CHECK(out == 37);

    CHECK(dlogfp_mulmod(1, 1, 0, &out) == DLOGFP_ERR_DOMAIN);
    CHECK(dlogfp_invmod(2, 4, &out) == DLOGFP_ERR_DOMAIN);
    CHECK(std::strlen(dlogfp_last_error()) > 0);
    CHECK(dlogfp_mulmod(1, 1, 2, nullptr) == DLOGFP_ERR_INVALID_ARGUMENT);

    CHECK(dlogfp_is_prime(41) == 1);
    CHECK(dlogfp_is_prime(40) == 0);
    CHECK(dlogfp_is_prime(200560490131ULL) == 1);
}

TEST_CASE("factorization across the boundary") {
    std::uint64_t primes[4] = {};
    std::uint32_t exponents[4] = {};
    std::size_t count = 0;

    CHECK(dlogfp_factorize(40, primes, exponents, 4, &count) == DLOGFP_OK);
    REQUIRE(count == 2);
    CHECK(primes[0] == 2);
    CHECK(exponents[0] == 3);
    CHECK(primes[1] == 5);
    CHECK(exponents[1] == 1);

    // Too small a buffer reports the needed size.
    count = 0;
    CHECK(dlogfp_factorize(40, primes, exponents, 1, &count)
          == DLOGFP_ERR_INVALID_ARGUMENT);
    CHECK(count == 2);

    CHECK(dlogfp_factorize(1, primes, exponents, 4, &count) == DLOGFP_OK);
    CHECK(count == 0);
    CHECK(dlogfp_factorize(0, primes, exponents, 4, &count)
          == DLOGFP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("context lifecycle and accessors") {
    dlogfp_ctx* ctx = nullptr;
    REQUIRE(dlogfp_ctx_create(41, 13, &ctx) == DLOGFP_OK);
    CHECK(dlogfp_ctx_prime(ctx) == 41);
    CHECK(dlogfp_ctx_generator(ctx) == 13);
    REQUIRE(dlogfp_ctx_factor_count(ctx) == 2);

    std::uint64_t q = 0;
    std::uint32_t e = 0;
    CHECK(dlogfp_ctx_factor(ctx, 0, &q, &e) == DLOGFP_OK);
    CHECK(q == 2);
    CHECK(e == 3);
    CHECK(dlogfp_ctx_factor(ctx, 1, &q, &e) == DLOGFP_OK);
    CHECK(q == 5);
    CHECK(e == 1);
    CHECK(dlogfp_ctx_factor(ctx, 2, &q, &e) == DLOGFP_ERR_INVALID_ARGUMENT);
    dlogfp_ctx_free(ctx);
    dlogfp_ctx_free(nullptr); // no-op
}

TEST_CASE("context creation failures map to statuses") {
    dlogfp_ctx* ctx = nullptr;
    CHECK(dlogfp_ctx_create(40, 13, &ctx) == DLOGFP_ERR_COMPOSITE_MODULUS);
    CHECK(dlogfp_ctx_create(41, 10, &ctx) == DLOGFP_ERR_NOT_GENERATOR);
    CHECK(dlogfp_ctx_create(41, 0, &ctx) == DLOGFP_ERR_INVALID_ARGUMENT);
    CHECK(dlogfp_ctx_create(41, 13, nullptr) == DLOGFP_ERR_INVALID_ARGUMENT);

    const std::uint64_t primes[2] = {2, 5};
    const std::uint32_t good[2] = {3, 1};
    const std::uint32_t bad[2] = {2, 1};
    CHECK(dlogfp_ctx_create_with_factors(41, 13, primes, good, 2, &ctx) == DLOGFP_OK);
    dlogfp_ctx_free(ctx);
    CHECK(dlogfp_ctx_create_with_factors(41, 13, primes, bad, 2, &ctx)
          == DLOGFP_ERR_FACTORIZATION_MISMATCH);
    const std::uint64_t composite[2] = {4, 10};
    CHECK(dlogfp_ctx_create_with_factors(41, 13, composite, good, 2, &ctx)
          == DLOGFP_ERR_FACTORIZATION_MISMATCH);
}

TEST_CASE("solving through the boundary") {
    dlogfp_ctx* ctx = nullptr;
    REQUIRE(dlogfp_ctx_create(41, 13, &ctx) == DLOGFP_OK);

    std::uint64_t x = 0;
    CHECK(dlogfp_solve(ctx, 8, DLOGFP_METHOD_TRACEBACK, &x) == DLOGFP_OK);
    CHECK(x == 18);
    CHECK(dlogfp_solve(ctx, 8, DLOGFP_METHOD_POHLIG, &x) == DLOGFP_OK);
    CHECK(x == 18);
    CHECK(dlogfp_solve(ctx, 1, DLOGFP_METHOD_TRACEBACK, &x) == DLOGFP_OK);
    CHECK(x == 0);

    CHECK(dlogfp_solve(ctx, 0, DLOGFP_METHOD_TRACEBACK, &x) == DLOGFP_ERR_NOT_IN_GROUP);
    CHECK(dlogfp_solve(ctx, 41, DLOGFP_METHOD_POHLIG, &x) == DLOGFP_ERR_NOT_IN_GROUP);
    CHECK(dlogfp_solve(ctx, 8, DLOGFP_METHOD_TRACEBACK, nullptr)
          == DLOGFP_ERR_INVALID_ARGUMENT);
    CHECK(dlogfp_solve(nullptr, 8, DLOGFP_METHOD_TRACEBACK, &x)
          == DLOGFP_ERR_INVALID_ARGUMENT);

    // Every residue of the full group solves under both methods.
    for (std::uint64_t h = 1; h < 41; ++h) {
        std::uint64_t xt = 0;
        std::uint64_t xp = 0;
        CHECK(dlogfp_solve(ctx, h, DLOGFP_METHOD_TRACEBACK, &xt) == DLOGFP_OK);
        CHECK(dlogfp_solve(ctx, h, DLOGFP_METHOD_POHLIG, &xp) == DLOGFP_OK);
        CHECK(xt == xp);
        std::uint64_t back = 0;
        CHECK(dlogfp_powmod(13, xt, 41, &back) == DLOGFP_OK);
        CHECK(back == h);
    }
    dlogfp_ctx_free(ctx);
}

TEST_CASE("traced solve exposes the descent") {
    dlogfp_ctx* ctx = nullptr;
    REQUIRE(dlogfp_ctx_create(41, 13, &ctx) == DLOGFP_OK);

    std::uint64_t x = 0;
    dlogfp_trace* trace = nullptr;
    REQUIRE(dlogfp_solve_traced(ctx, 8, DLOGFP_METHOD_TRACEBACK, &x, &trace) == DLOGFP_OK);
    CHECK(x == 18);

    REQUIRE(dlogfp_trace_stack_size(trace) == 5);
    const std::uint64_t expected_stack[5] = {8, 23, 37, 16, 1};
    for (std::size_t i = 0; i < 5; ++i) {
        std::uint64_t elem = 0;
        CHECK(dlogfp_trace_stack_at(trace, i, &elem) == DLOGFP_OK);
        CHECK(elem == expected_stack[i]);
    }
    std::uint64_t elem = 0;
    CHECK(dlogfp_trace_stack_at(trace, 5, &elem) == DLOGFP_ERR_INVALID_ARGUMENT);

    REQUIRE(dlogfp_trace_stage_count(trace) == 4);
    const std::uint64_t gpows[4] = {24, 32, 36, 18};
    for (std::size_t i = 0; i < 4; ++i) {
        dlogfp_stage stage;
        CHECK(dlogfp_trace_stage_at(trace, i, &stage) == DLOGFP_OK);
        CHECK(stage.gpow == gpows[i]);
    }
    CHECK(dlogfp_trace_congruence_count(trace) == 0);
    dlogfp_trace_free(trace);

    trace = nullptr;
    REQUIRE(dlogfp_solve_traced(ctx, 8, DLOGFP_METHOD_POHLIG, &x, &trace) == DLOGFP_OK);
    CHECK(x == 18);
    CHECK(dlogfp_trace_stack_size(trace) == 0);
    CHECK(dlogfp_trace_stage_count(trace) == 4);
    REQUIRE(dlogfp_trace_congruence_count(trace) == 2);
    std::uint64_t remainder = 0;
    std::uint64_t modulus = 0;
    CHECK(dlogfp_trace_congruence_at(trace, 0, &remainder, &modulus) == DLOGFP_OK);
    CHECK(remainder == 2);
    CHECK(modulus == 8);
    CHECK(dlogfp_trace_congruence_at(trace, 1, &remainder, &modulus) == DLOGFP_OK);
    CHECK(remainder == 3);
    CHECK(modulus == 5);
    dlogfp_trace_free(trace);
    dlogfp_trace_free(nullptr); // no-op

    dlogfp_ctx_free(ctx);
}

TEST_CASE("the primorial instance crosses the boundary intact") {
    dlogfp_ctx* ctx = nullptr;
    REQUIRE(dlogfp_ctx_create(200560490131ULL, 79, &ctx) == DLOGFP_OK);
    CHECK(dlogfp_ctx_factor_count(ctx) == 11);
    std::uint64_t x = 0;
    CHECK(dlogfp_solve(ctx, 23, DLOGFP_METHOD_TRACEBACK, &x) == DLOGFP_OK);
    CHECK(x == 127013812855ULL);
    CHECK(dlogfp_solve(ctx, 23, DLOGFP_METHOD_POHLIG, &x) == DLOGFP_OK);
    CHECK(x == 127013812855ULL);
    dlogfp_ctx_free(ctx);
}
