#include "traceback.hpp"

#include <cassert>
#include <string>

#include "error.hpp"
#include "modmath.hpp"
#include "subgroup.hpp"

namespace dlogfp {

std::uint64_t RootCache::coset_generator(std::uint64_t factor) {
    auto it = eps_.find(factor);
    if (it != eps_.end())
        return it->second;
    std::uint64_t eps = powmod(params_.g(), params_.group_order() / factor, params_.p());
    eps_.emplace(factor, eps);
    return eps;
}

TraceStack build_trace_stack(const FieldParams& params, std::uint64_t beta) {
    if (beta == 0 || beta >= params.p())
        raise(Status::not_in_group,
              std::to_string(beta) + " is not an element of F_p* for p = " +
                  std::to_string(params.p()));
    TraceStack stack;
    stack.factors = params.ascending_factors();
    stack.elems.reserve(stack.factors.size() + 1);
    stack.elems.push_back(beta);
    for (std::uint64_t f : stack.factors)
        stack.elems.push_back(powmod(stack.elems.back(), f, params.p()));
    if (stack.elems.back() != 1)
        raise(Status::internal,
              "trace stack did not terminate at 1; parameters are inconsistent");
    return stack;
}

DescentState descend_root(const FieldParams& params, const DescentState& state,
                          std::uint64_t factor, std::uint64_t stack_top,
                          RootCache* cache, DescentStage* stage) {
    if (factor == 0 || state.gpow % factor != 0)
        raise(Status::invalid_argument,
              "descend_root: factor " + std::to_string(factor) +
                  " does not divide gpow " + std::to_string(state.gpow));
    const std::uint64_t p = params.p();
    const std::uint64_t order = params.group_order();
    const std::uint64_t root_pow = state.gpow / factor;
    const std::uint64_t delta = powmod(params.g(), root_pow, p);

    std::uint64_t k = 0;
    if (delta != stack_top) {
        RootCache local(params);
        RootCache& roots = cache ? *cache : local;
        std::uint64_t eps = roots.coset_generator(factor);
        k = coset_locate(delta, eps, factor, stack_top, p);
    }

    // k <= factor-1, so the new exponent stays <= p-1: no overflow below 2^63.
    DescentState next{root_pow + k * (order / factor), state.level + 1};
    assert(next.gpow <= order);
    if (stage)
        *stage = DescentStage{factor, k, next.gpow, delta, stack_top};
    return next;
}

std::uint64_t solve_traceback(const FieldParams& params, std::uint64_t beta,
                              TracebackTrace* trace) {
    TraceStack stack = build_trace_stack(params, beta);
    const std::size_t s = stack.factors.size();
    if (trace) {
        trace->stack = stack;
        trace->stages.clear();
        trace->stages.reserve(s);
    }

    RootCache roots(params);
    DescentState state{params.group_order(), 0};
    // The top element, g^(p-1) = 1, is consumed by initializing gpow to
    // p-1; the factor list is then replayed in reverse of the powering
    // order, largest root first.
    for (std::size_t i = s; i-- > 0;) {
        DescentStage stage;
        state = descend_root(params, state, stack.factors[i], stack.elems[i], &roots,
                             trace ? &stage : nullptr);
        if (trace)
            trace->stages.push_back(stage);
        assert(powmod(params.g(), state.gpow, params.p()) == stack.elems[i]);
    }

    std::uint64_t x = state.gpow % params.group_order();
    if (powmod(params.g(), x, params.p()) != beta)
        raise(Status::internal, "traceback descent produced a wrong exponent");
    return x;
}

} // namespace dlogfp
