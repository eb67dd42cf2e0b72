// Classical Silver-Pohlig-Hellman baseline: solve the discrete log
// modulo each prime power q^e dividing p-1 by digit lifting, then
// recombine with the Chinese Remainder Theorem. Shares the subgroup
// search with the root-descent solver so benchmark differences reflect
// the surrounding structure, not the inner search.

#ifndef DLOGFP_POHLIG_HPP
#define DLOGFP_POHLIG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "field.hpp"
#include "traceback.hpp"

namespace dlogfp {

/// One congruence x = remainder (mod modulus), modulus a prime power.
struct ResidueCongruence {
    std::uint64_t remainder;
    std::uint64_t modulus;
};

struct PohligTrace {
    std::vector<ResidueCongruence> congruences;
    std::vector<DescentStage> stages; // one per digit round: factor=q, k=digit
};

/// x mod q^e where g^x = beta, via e digit-lifting rounds in the order-q
/// subgroup. q^e must be the full multiplicity of q in p-1.
std::uint64_t dlog_prime_power(const FieldParams& params, std::uint64_t beta,
                               std::uint64_t q, std::uint32_t e,
                               std::vector<DescentStage>* stages = nullptr);

/// Unique x in [0, prod moduli) satisfying every congruence. Moduli must
/// be pairwise coprime and their product below 2^63.
std::uint64_t crt_combine(std::span<const ResidueCongruence> congruences);

/// Full baseline solve: returns x in [0, p-1) with g^x = beta (mod p),
/// re-verified by one final exponentiation.
std::uint64_t solve_pohlig(const FieldParams& params, std::uint64_t beta,
                           PohligTrace* trace = nullptr);

} // namespace dlogfp

#endif
