#include "field.hpp"

#include <string>

#include "error.hpp"
#include "modmath.hpp"

namespace dlogfp {

FieldParams::FieldParams(std::uint64_t p, std::uint64_t g, FactorMultiset order_factors)
    : p_(p), g_(g), order_factors_(std::move(order_factors)) {
    if (p < 3 || p >= (1ull << 63))
        raise(Status::invalid_argument,
              "modulus " + std::to_string(p) + " out of range [3, 2^63)");
    if (!is_prime(p))
        raise(Status::composite_modulus,
              "modulus " + std::to_string(p) + " is not prime");
    for (auto [q, e] : order_factors_.entries) {
        if (e == 0 || !is_prime(q))
            raise(Status::factorization_mismatch,
                  "factor " + std::to_string(q) + " is not prime (or has zero multiplicity)");
    }
    if (order_factors_.product() != p - 1)
        raise(Status::factorization_mismatch,
              "factors do not multiply to " + std::to_string(p - 1));
    if (g == 0 || g >= p)
        raise(Status::invalid_argument,
              "generator " + std::to_string(g) + " out of range [1, p)");
    // g = 1 falls through: the subgroup test below rejects it, since 1
    // generates nothing but itself.
    for (auto [q, e] : order_factors_.entries) {
        if (powmod(g, (p - 1) / q, p) == 1)
            raise(Status::not_generator,
                  std::to_string(g) + " is not a generator: g^((p-1)/" +
                      std::to_string(q) + ") = 1");
    }
    ascending_ = factor_list(order_factors_, FactorOrder::ascending);
}

FieldParams FieldParams::from_generator(std::uint64_t p, std::uint64_t g) {
    if (p < 3 || p >= (1ull << 63))
        raise(Status::invalid_argument,
              "modulus " + std::to_string(p) + " out of range [3, 2^63)");
    return FieldParams(p, g, factorize(p - 1));
}

} // namespace dlogfp
