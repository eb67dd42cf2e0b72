#include "subgroup.hpp"

#include <string>
#include <unordered_map>

#include "error.hpp"
#include "modmath.hpp"

namespace dlogfp {

namespace {

[[noreturn]] void not_in_subgroup(std::uint64_t target, std::uint64_t n) {
    raise(Status::not_found,
          std::to_string(target) + " is not in the subgroup of order " + std::to_string(n));
}

std::uint64_t linear_scan(std::uint64_t eps, std::uint64_t n, std::uint64_t target,
                          std::uint64_t p, SearchStats* stats) {
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        if (cur == target)
            return k;
        cur = mulmod(cur, eps, p);
        if (stats)
            ++stats->mulmods;
    }
    not_in_subgroup(target, n);
}

} // namespace

std::uint64_t subgroup_dlog_bsgs(std::uint64_t eps, std::uint64_t n, std::uint64_t target,
                                 std::uint64_t p, SearchStats* stats) {
    if (p < 2 || n == 0)
        raise(Status::invalid_argument, "subgroup_dlog_bsgs: empty group");
    if (eps == 0 || eps >= p || target == 0 || target >= p)
        raise(Status::invalid_argument, "subgroup_dlog_bsgs: operand not in F_p*");

    if (n <= kLinearScanMax)
        return linear_scan(eps, n, target, p, stats);

    const std::uint64_t m = ceil_sqrt(n);
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        if (j + 1 < m) {
            cur = mulmod(cur, eps, p);
            if (stats)
                ++stats->mulmods;
        }
    }
    if (stats) {
        stats->baby_steps = m;
        stats->used_table = true;
    }

    // cur = eps^(m-1); one more multiply gives eps^m, whose inverse is
    // the giant stride. The inverse comes from extended Euclid, not a
    // group exponentiation, so the multiplication budget stays 2m + O(1).
    const std::uint64_t stride = invmod(mulmod(cur, eps, p), p);
    if (stats)
        ++stats->mulmods;

    std::uint64_t gamma = target;
    for (std::uint64_t i = 0; i * m < n; ++i) {
        if (stats)
            ++stats->giant_steps;
        if (auto it = baby.find(gamma); it != baby.end()) {
            std::uint64_t k = i * m + it->second;
            if (k < n)
                return k;
        }
        gamma = mulmod(gamma, stride, p);
        if (stats)
            ++stats->mulmods;
    }
    not_in_subgroup(target, n);
}

std::uint64_t coset_locate(std::uint64_t delta, std::uint64_t eps, std::uint64_t n,
                           std::uint64_t target, std::uint64_t p, SearchStats* stats) {
    if (target == delta)
        return 0;
    std::uint64_t shifted = mulmod(target, invmod(delta, p), p);
    if (stats)
        ++stats->mulmods;
    return subgroup_dlog_bsgs(eps, n, shifted, p, stats);
}

} // namespace dlogfp
