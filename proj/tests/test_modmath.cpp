#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "error.hpp"
#include "modmath.hpp"
#include "oracles.hpp"

using namespace dlogfp;

namespace {

template <typename Fn>
Status thrown_status(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.status();
    }
    return Status::ok;
}

} // namespace

TEST_CASE("mulmod matches wide multiplication") {
    CHECK(mulmod(7, 8, 41) == 15);
    CHECK(mulmod(10, 37, 41) == 1);
    CHECK(mulmod(0, 12345, 97) == 0);

    // Operands near the top of the contract range.
    std::mt19937_64 rng(0x6d6f646d756cULL);
    std::uniform_int_distribution<std::uint64_t> dist(0, (1ULL << 63) - 1);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = dist(rng);
        const std::uint64_t b = dist(rng);
        const std::uint64_t m = dist(rng) | 1;
        const auto wide = static_cast<unsigned __int128>(a) * b % m;
        CHECK(mulmod(a, b, m) == static_cast<std::uint64_t>(wide));
    }
}

TEST_CASE("mulmod rejects a zero modulus") {
    CHECK(thrown_status([] { mulmod(1, 1, 0); }) == Status::domain_error);
}

TEST_CASE("powmod known values") {
    CHECK(powmod(13, 18, 41) == 8);
    CHECK(powmod(6, 6689, 8101) == 7531);
    CHECK(powmod(79, 127013812855ULL, 200560490131ULL) == 23);
    CHECK(powmod(13, 0, 41) == 1);
    CHECK(powmod(0, 0, 7) == 1); // empty product convention
    CHECK(powmod(5, 1, 1) == 0); // everything collapses mod 1
}

TEST_CASE("powmod splits exponents multiplicatively") {
    std::mt19937_64 rng(0x706f776d6f64ULL);
    std::uniform_int_distribution<std::uint64_t> dist(0, (1ULL << 62) - 1);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t a = dist(rng);
        const std::uint64_t e1 = dist(rng);
        const std::uint64_t e2 = dist(rng);
        const std::uint64_t m = dist(rng) + 2;
        CHECK(powmod(a, e1 + e2, m)
              == mulmod(powmod(a, e1, m), powmod(a, e2, m), m));
    }
}

TEST_CASE("invmod round-trips and reports failures") {
    CHECK(invmod(10, 41) == 37);
    CHECK(invmod(1, 7919) == 1);

    std::mt19937_64 rng(0x696e766d6f64ULL);
    std::uniform_int_distribution<std::uint64_t> dist(2, (1ULL << 62));
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t m = dist(rng);
        const std::uint64_t a = dist(rng) % m;
        if (a == 0 || std::gcd(a, m) != 1) {
            continue;
        }
        CHECK(mulmod(a, invmod(a, m), m) == 1);
    }

    CHECK(thrown_status([] { invmod(2, 4); }) == Status::domain_error);
    try {
        invmod(2, 4);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK(thrown_status([] { invmod(0, 5); }) == Status::domain_error);
}

TEST_CASE("is_prime agrees with a sieve up to 10^6") {
    constexpr std::uint64_t kLimit = 1000000;
    const auto primes = oracle::primes_upto(kLimit);
    std::vector<bool> flag(kLimit + 1, false);
    for (std::uint64_t q : primes) {
        flag[q] = true;
    }
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 0; n <= kLimit; ++n) {
        if (is_prime(n) != flag[n]) {
            ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("is_prime handles adversarial composites and large primes") {
    CHECK(is_prime(41));
    CHECK(is_prime(200560490131ULL));
    CHECK(is_prime(2305843009213693951ULL)); // 2^61 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));         // Carmichael
    CHECK_FALSE(is_prime(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime(10002200057ULL)); // 100003 * 100019
}

TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    CHECK(isqrt(26) == 5);
    CHECK(ceil_sqrt(24) == 5);
    CHECK(ceil_sqrt(25) == 5);
    CHECK(ceil_sqrt(26) == 6);
    CHECK(isqrt(1ULL << 62) == (1ULL << 31));
    CHECK(ceil_sqrt((1ULL << 62) + 1) == (1ULL << 31) + 1);

    std::mt19937_64 rng(0x73717274ULL);
    std::uniform_int_distribution<std::uint64_t> dist(0, (1ULL << 63) - 1);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = dist(rng);
        const std::uint64_t r = isqrt(n);
        CHECK(static_cast<unsigned __int128>(r) * r <= n);
        CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
        const std::uint64_t c = ceil_sqrt(n);
        CHECK(static_cast<unsigned __int128>(c) * c >= n);
        if (c > 0) {
            CHECK(static_cast<unsigned __int128>(c - 1) * (c - 1) < n);
        }
    }
}
