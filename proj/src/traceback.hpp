// Root-descent discrete log solver.
//
// Powering beta by the ascending factor list [f_1, ..., f_s] of p-1
// yields the trace stack [beta, beta^(f_1), beta^(f_1 f_2), ..., 1].
// The solve then walks the generator side down from g^(p-1) = 1: at each
// level it takes the f-th root matching the next stack element, with f
// consuming the same factor list back-to-front. Each root is picked out
// of the coset delta * <g^((p-1)/f)> by the subgroup search technique, so the
// whole descent costs O(log p + sum_i e_i * sqrt(p_i)) multiplications
// and ends with gpow = x, the wanted exponent, with no residue
// recombination step.

#ifndef DLOGFP_TRACEBACK_HPP
#define DLOGFP_TRACEBACK_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "field.hpp"

namespace dlogfp {

/// The successive-power stack of beta, plus the factor list that built it.
/// elems[j+1] = elems[j]^factors[j] mod p; the last element is always 1.
struct TraceStack {
    std::vector<std::uint64_t> elems;
    std::vector<std::uint64_t> factors;
};

/// Generator-side position during the descent: g^gpow equals the stack
/// element `level` steps below the top.
struct DescentState {
    std::uint64_t gpow;
    std::size_t level;
};

/// Diagnostics for one descent level (or one digit round in the
/// Pohlig-Hellman baseline, which reuses the shape).
struct DescentStage {
    std::uint64_t factor;
    std::uint64_t k;
    std::uint64_t gpow;
    std::uint64_t delta;
    std::uint64_t target;
};

struct TracebackTrace {
    TraceStack stack;
    std::vector<DescentStage> stages;
};

/// Caches g^((p-1)/f) per distinct factor f so repeated factors do not
/// recompute the coset generator.
class RootCache {
public:
    explicit RootCache(const FieldParams& params) : params_(params) {}
    std::uint64_t coset_generator(std::uint64_t factor);

private:
    const FieldParams& params_;
    std::map<std::uint64_t, std::uint64_t> eps_;
};

/// Builds the power stack for beta: s exponentiations, one per factor.
/// Throws not_in_group for beta outside [1, p) and internal if the stack
/// fails to terminate at 1 (impossible for a validated context).
TraceStack build_trace_stack(const FieldParams& params, std::uint64_t beta);

/// One root step: from g^gpow (the stack element one level above) to the
/// f-th root matching stack_top. New exponent:
///     gpow/f + k * (p-1)/f,   k = position of stack_top in the coset
///                                 g^(gpow/f) * <g^((p-1)/f)>.
/// `factor` must divide state.gpow.
DescentState descend_root(const FieldParams& params, const DescentState& state,
                          std::uint64_t factor, std::uint64_t stack_top,
                          RootCache* cache = nullptr, DescentStage* stage = nullptr);

/// Full solve: returns x in [0, p-1) with g^x = beta (mod p). The result
/// is re-verified by one final exponentiation before returning.
std::uint64_t solve_traceback(const FieldParams& params, std::uint64_t beta,
                              TracebackTrace* trace = nullptr);

} // namespace dlogfp

#endif
