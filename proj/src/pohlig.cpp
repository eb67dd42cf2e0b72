#include "pohlig.hpp"

#include <numeric>
#include <string>

#include "error.hpp"
#include "modmath.hpp"
#include "subgroup.hpp"

namespace dlogfp {

std::uint64_t dlog_prime_power(const FieldParams& params, std::uint64_t beta,
                               std::uint64_t q, std::uint32_t e,
                               std::vector<DescentStage>* stages) {
    if (beta == 0 || beta >= params.p())
        raise(Status::not_in_group,
              std::to_string(beta) + " is not an element of F_p*");
    const std::uint64_t p = params.p();
    const std::uint64_t order = params.group_order();
    auto it = params.order_factors().entries.find(q);
    if (it == params.order_factors().entries.end() || it->second != e)
        raise(Status::invalid_argument,
              std::to_string(q) + "^" + std::to_string(e) +
                  " is not the full multiplicity of " + std::to_string(q) + " in p-1");

    const std::uint64_t gamma = powmod(params.g(), order / q, p); // order q
    const std::uint64_t g_inv = invmod(params.g(), p);

    std::uint64_t x = 0;       // accumulates x mod q^(j+1)
    std::uint64_t q_pow = 1;   // q^j
    for (std::uint32_t j = 0; j < e; ++j) {
        // Project beta * g^(-x) into the order-q subgroup and read off
        // the next base-q digit of the exponent.
        std::uint64_t shifted = mulmod(beta, powmod(g_inv, x, p), p);
        std::uint64_t target = powmod(shifted, order / (q_pow * q), p);
        std::uint64_t digit;
        try {
            digit = subgroup_dlog_bsgs(gamma, q, target, p);
        } catch (const Error& err) {
            if (err.status() == Status::not_found)
                raise(Status::internal,
                      "digit lift failed in the order-" + std::to_string(q) +
                          " subgroup; parameters are inconsistent");
            throw;
        }
        x += digit * q_pow;
        if (stages)
            stages->push_back(DescentStage{q, digit, x, gamma, target});
        q_pow *= q;
    }
    return x;
}

std::uint64_t crt_combine(std::span<const ResidueCongruence> congruences) {
    if (congruences.empty())
        raise(Status::invalid_argument, "crt_combine: empty congruence list");
    std::uint64_t x = 0, modulus = 1;
    for (const auto& c : congruences) {
        if (c.modulus == 0 || c.remainder >= c.modulus)
            raise(Status::invalid_argument, "crt_combine: remainder out of range");
        if (std::gcd(modulus, c.modulus) != 1)
            raise(Status::domain_error,
                  "crt_combine: moduli " + std::to_string(modulus) + " and " +
                      std::to_string(c.modulus) + " are not coprime");
        unsigned __int128 wide = static_cast<unsigned __int128>(modulus) * c.modulus;
        if (wide >= (static_cast<unsigned __int128>(1) << 63))
            raise(Status::domain_error, "crt_combine: modulus product exceeds 2^63");
        // x := x + modulus * t solves both x mod modulus and c.
        std::uint64_t diff = (c.remainder + c.modulus - x % c.modulus) % c.modulus;
        std::uint64_t t = mulmod(diff, invmod(modulus % c.modulus, c.modulus), c.modulus);
        x += modulus * t;
        modulus = static_cast<std::uint64_t>(wide);
    }
    return x;
}

std::uint64_t solve_pohlig(const FieldParams& params, std::uint64_t beta,
                           PohligTrace* trace) {
    if (beta == 0 || beta >= params.p())
        raise(Status::not_in_group,
              std::to_string(beta) + " is not an element of F_p*");
    std::vector<ResidueCongruence> congruences;
    congruences.reserve(params.order_factors().entries.size());
    for (auto [q, e] : params.order_factors().entries) {
        std::uint64_t q_pow = 1;
        for (std::uint32_t i = 0; i < e; ++i)
            q_pow *= q;
        std::uint64_t remainder =
            dlog_prime_power(params, beta, q, e, trace ? &trace->stages : nullptr);
        congruences.push_back(ResidueCongruence{remainder, q_pow});
    }
    std::uint64_t x = crt_combine(congruences);
    if (trace)
        trace->congruences = congruences;
    if (powmod(params.g(), x, params.p()) != beta)
        raise(Status::internal, "pohlig-hellman produced a wrong exponent");
    return x;
}

} // namespace dlogfp
