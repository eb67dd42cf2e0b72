// Independent reference implementations the tests compare against. Written
// with the dumbest correct algorithms available; nothing here shares code
// with the library under test.

#ifndef DLOGFP_TESTS_ORACLES_HPP
#define DLOGFP_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

/// Plain trial division, O(sqrt n).
std::map<std::uint64_t, std::uint32_t> factorize(std::uint64_t n);

/// Sieve of Eratosthenes; primes <= limit in ascending order.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

/// Exhaustive discrete-log table for generator g mod prime p:
/// table[h] = x with g^x = h, table[0] unused. Requires small p.
std::vector<std::uint64_t> dlog_table(std::uint64_t g, std::uint64_t p);

/// Smallest generator of F_p* by direct order checking.
std::uint64_t smallest_generator(std::uint64_t p);

} // namespace oracle

#endif
