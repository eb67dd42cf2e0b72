// Overflow-safe modular arithmetic and deterministic primality for
// 64-bit operands. All residues and moduli are expected to stay below
// 2^63; products go through a 128-bit intermediate so no input can
// overflow a multiplication.

#ifndef DLOGFP_MODMATH_HPP
#define DLOGFP_MODMATH_HPP

#include <cstdint>

namespace dlogfp {

/// (a * b) mod m via a 128-bit intermediate product.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// a^e mod m by square-and-multiply, O(log e) multiplications.
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Multiplicative inverse of a mod m (extended Euclid).
/// Requires gcd(a, m) = 1; the error message reports the gcd otherwise.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(std::uint64_t n);

/// Integer floor square root.
std::uint64_t isqrt(std::uint64_t n);

/// Smallest s with s*s >= n.
std::uint64_t ceil_sqrt(std::uint64_t n);

} // namespace dlogfp

#endif
