// Validated group context: prime modulus p, generator g of F_p*, and the
// factorization of the group order p-1. Every solver takes one of these,
// so all invariant checking happens here, once.

#ifndef DLOGFP_FIELD_HPP
#define DLOGFP_FIELD_HPP

#include <cstdint>
#include <vector>

#include "factor.hpp"

namespace dlogfp {

class FieldParams {
public:
    /// Validates and builds the context. Throws:
    ///   invalid_argument       p or g out of range (3 <= p < 2^63, 1 <= g < p)
    ///   composite_modulus      p fails the primality test
    ///   factorization_mismatch order_factors does not multiply to p-1
    ///                          (or contains a composite "prime")
    ///   not_generator          g^((p-1)/q) = 1 for some prime q | p-1
    FieldParams(std::uint64_t p, std::uint64_t g, FactorMultiset order_factors);

    /// Convenience constructor that factors p-1 itself.
    static FieldParams from_generator(std::uint64_t p, std::uint64_t g);

    std::uint64_t p() const { return p_; }
    std::uint64_t g() const { return g_; }
    std::uint64_t group_order() const { return p_ - 1; }
    const FactorMultiset& order_factors() const { return order_factors_; }

    /// Factor list of p-1 in ascending order, one entry per unit of
    /// multiplicity (the powering order for trace stacks).
    const std::vector<std::uint64_t>& ascending_factors() const { return ascending_; }

private:
    std::uint64_t p_;
    std::uint64_t g_;
    FactorMultiset order_factors_;
    std::vector<std::uint64_t> ascending_;
};

} // namespace dlogfp

#endif
