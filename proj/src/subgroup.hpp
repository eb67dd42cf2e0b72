// Discrete log inside a small cyclic subgroup of F_p*: the shared inner
// search of both solvers. Baby-step giant-step with a hash table, or a
// plain linear scan when the subgroup is tiny.

#ifndef DLOGFP_SUBGROUP_HPP
#define DLOGFP_SUBGROUP_HPP

#include <cstdint>

namespace dlogfp {

/// Subgroups up to this order are searched linearly; no table is built.
inline constexpr std::uint64_t kLinearScanMax = 64;

/// Operation counters for one search call. Group multiplications only;
/// the extended-Euclid inverse of the giant stride is not a group op.
struct SearchStats {
    std::uint64_t mulmods = 0;
    std::uint64_t baby_steps = 0;
    std::uint64_t giant_steps = 0;
    bool used_table = false;
};

/// Finds the unique k in [0, n) with eps^k = target (mod p).
/// eps must have order exactly n; takes O(sqrt n) multiplications and
/// O(sqrt n) table space. Throws not_found if target is outside the
/// subgroup generated by eps (g not a real generator upstream, usually).
std::uint64_t subgroup_dlog_bsgs(std::uint64_t eps, std::uint64_t n,
                                 std::uint64_t target, std::uint64_t p,
                                 SearchStats* stats = nullptr);

/// Finds k in [0, n) with delta * eps^k = target (mod p), i.e. locates
/// target inside the coset delta * <eps>. Returns 0 without searching
/// when target already equals delta.
std::uint64_t coset_locate(std::uint64_t delta, std::uint64_t eps, std::uint64_t n,
                           std::uint64_t target, std::uint64_t p,
                           SearchStats* stats = nullptr);

} // namespace dlogfp

#endif
