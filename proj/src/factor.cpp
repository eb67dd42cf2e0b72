#include "factor.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"
#include "modmath.hpp"

namespace dlogfp {

namespace {

constexpr std::uint64_t kTrialBound = 100000;
constexpr std::uint64_t kWidthLimit = 1ull << 63;

// Brent's cycle variant of Pollard rho with batched gcds. Returns a
// nontrivial factor of odd composite n, or 0 if this increment failed.
std::uint64_t brent_rho(std::uint64_t n, std::uint64_t c) {
    auto step = [n, c](std::uint64_t x) {
        std::uint64_t r = mulmod(x, x, n) + c;
        return r >= n ? r - n : r;
    };
    std::uint64_t x = 2, y = 0, xs = 0;
    std::uint64_t g = 1, q = 1;
    constexpr std::uint64_t batch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
        y = x;
        for (std::uint64_t i = 0; i < r; ++i)
            x = step(x);
        for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
            xs = x;
            std::uint64_t len = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < len; ++i) {
                x = step(x);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
    }
    if (g == n) {
        // The batch overshot; replay it one step at a time.
        g = 1;
        while (g == 1) {
            xs = step(xs);
            g = std::gcd(xs > y ? xs - y : y - xs, n);
        }
    }
    return g == n ? 0 : g;
}

void factor_recurse(std::uint64_t n, std::map<std::uint64_t, std::uint32_t>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = 0;
    for (std::uint64_t c = 1; d == 0 || d == n; ++c)
        d = brent_rho(n, c);
    factor_recurse(d, out);
    factor_recurse(n / d, out);
}

} // namespace

std::uint64_t FactorMultiset::product() const {
    unsigned __int128 acc = 1;
    for (auto [prime, exp] : entries) {
        for (std::uint32_t i = 0; i < exp; ++i) {
            acc *= prime;
            if (acc >= kWidthLimit)
                raise(Status::domain_error, "factor product exceeds 2^63");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

FactorMultiset factorize(std::uint64_t n) {
    if (n == 0)
        raise(Status::invalid_argument, "factorize: n must be >= 1");
    if (n >= kWidthLimit)
        raise(Status::invalid_argument, "factorize: n must be < 2^63");
    FactorMultiset result;
    while (n % 2 == 0) {
        ++result.entries[2];
        n /= 2;
    }
    for (std::uint64_t d = 3; d <= kTrialBound && d * d <= n; d += 2) {
        while (n % d == 0) {
            ++result.entries[d];
            n /= d;
        }
    }
    if (n > 1)
        factor_recurse(n, result.entries);
    return result;
}

std::vector<std::uint64_t> factor_list(const FactorMultiset& f, FactorOrder order) {
    std::vector<std::uint64_t> list;
    for (auto [prime, exp] : f.entries)
        list.insert(list.end(), exp, prime);
    if (order == FactorOrder::descending)
        std::reverse(list.begin(), list.end());
    return list;
}

} // namespace dlogfp
