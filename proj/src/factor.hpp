// Integer factorization into a prime -> multiplicity multiset, and the
// flattened factor list the solvers consume.

#ifndef DLOGFP_FACTOR_HPP
#define DLOGFP_FACTOR_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace dlogfp {

/// Prime factorization as {prime -> exponent}. The ordered map gives
/// deterministic ascending iteration over distinct primes.
struct FactorMultiset {
    std::map<std::uint64_t, std::uint32_t> entries;

    /// Product of all prime powers; throws on overflow past 2^63.
    std::uint64_t product() const;

    bool operator==(const FactorMultiset&) const = default;
};

enum class FactorOrder { ascending, descending };

/// Complete prime factorization of n < 2^63. Trial division up to 10^5,
/// then deterministic Brent-rho on any remaining cofactor. n = 1 yields
/// an empty multiset.
FactorMultiset factorize(std::uint64_t n);

/// Flatten to a sorted list where each prime appears once per unit of
/// multiplicity, e.g. {2:3, 5:1} ascending -> [2, 2, 2, 5].
std::vector<std::uint64_t> factor_list(const FactorMultiset& f, FactorOrder order);

} // namespace dlogfp

#endif
