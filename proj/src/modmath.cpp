#include "modmath.hpp"

#include <cmath>

#include "error.hpp"

namespace dlogfp {

using uint128_t = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m == 0)
        raise(Status::domain_error, "mulmod: modulus is zero");
    return static_cast<std::uint64_t>(uint128_t(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 0)
        raise(Status::domain_error, "powmod: modulus is zero");
    std::uint64_t result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1)
            result = static_cast<std::uint64_t>(uint128_t(result) * a % m);
        a = static_cast<std::uint64_t>(uint128_t(a) * a % m);
        e >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    if (m == 0)
        raise(Status::domain_error, "invmod: modulus is zero");
    a %= m;
    // Extended Euclid on signed values; m < 2^63 keeps everything in range.
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        raise(Status::domain_error,
              "invmod: " + std::to_string(a) + " is not invertible mod " +
                  std::to_string(m) + " (gcd = " + std::to_string(r0) + ")");
    if (t0 < 0)
        t0 += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t0) % m;
}

namespace {

bool witness_composite(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    int s = 0;
    std::uint64_t d = n - 1;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 3.3 * 10^24,
    // which covers the whole 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (witness_composite(n, a, d, s))
            return false;
    }
    return true;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && uint128_t(s) * s > n)
        --s;
    while (uint128_t(s + 1) * (s + 1) <= n)
        ++s;
    return s;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
    std::uint64_t s = isqrt(n);
    return uint128_t(s) * s == n ? s : s + 1;
}

} // namespace dlogfp
