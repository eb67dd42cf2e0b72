// extern-C boundary: translates between the C handle/status surface and
// the C++ core. Exceptions stop here.

#include "dlogfp.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "error.hpp"
#include "factor.hpp"
#include "field.hpp"
#include "modmath.hpp"
#include "pohlig.hpp"
#include "traceback.hpp"

struct dlogfp_ctx {
    dlogfp::FieldParams params;
};

struct dlogfp_trace {
    std::vector<std::uint64_t> stack;
    std::vector<dlogfp::DescentStage> stages;
    std::vector<dlogfp::ResidueCongruence> congruences;
};

namespace {

thread_local std::string t_last_error;

dlogfp_status set_error(dlogfp::Status status, const char* what) {
    t_last_error = what;
    return static_cast<dlogfp_status>(static_cast<int>(status));
}

template <typename Fn>
dlogfp_status wrap(Fn&& fn) {
    try {
        fn();
        return DLOGFP_OK;
    } catch (const dlogfp::Error& err) {
        return set_error(err.status(), err.what());
    } catch (const std::bad_alloc&) {
        return set_error(dlogfp::Status::internal, "allocation failure");
    } catch (const std::exception& err) {
        return set_error(dlogfp::Status::internal, err.what());
    }
}

dlogfp_status invalid(const char* what) {
    return set_error(dlogfp::Status::invalid_argument, what);
}

} // namespace

extern "C" {

const char* dlogfp_status_name(dlogfp_status status) {
    switch (status) {
        case DLOGFP_OK: return "ok";
        case DLOGFP_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case DLOGFP_ERR_DOMAIN: return "domain_error";
        case DLOGFP_ERR_COMPOSITE_MODULUS: return "composite_modulus";
        case DLOGFP_ERR_FACTORIZATION_MISMATCH: return "factorization_mismatch";
        case DLOGFP_ERR_NOT_GENERATOR: return "not_generator";
        case DLOGFP_ERR_NOT_IN_GROUP: return "not_in_group";
        case DLOGFP_ERR_NOT_FOUND: return "not_found";
        case DLOGFP_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* dlogfp_last_error(void) {
    return t_last_error.c_str();
}

const char* dlogfp_version(void) {
    return "0.1.0";
}

dlogfp_status dlogfp_mulmod(uint64_t a, uint64_t b, uint64_t m, uint64_t* out) {
    if (!out)
        return invalid("null out pointer");
    return wrap([&] { *out = dlogfp::mulmod(a, b, m); });
}

dlogfp_status dlogfp_powmod(uint64_t a, uint64_t e, uint64_t m, uint64_t* out) {
    if (!out)
        return invalid("null out pointer");
    return wrap([&] { *out = dlogfp::powmod(a, e, m); });
}

dlogfp_status dlogfp_invmod(uint64_t a, uint64_t m, uint64_t* out) {
    if (!out)
        return invalid("null out pointer");
    return wrap([&] { *out = dlogfp::invmod(a, m); });
}

int dlogfp_is_prime(uint64_t n) {
    return dlogfp::is_prime(n) ? 1 : 0;
}

dlogfp_status dlogfp_factorize(uint64_t n, uint64_t* primes, uint32_t* exponents,
                               size_t cap, size_t* count) {
    if (!count || (!primes && cap > 0) || (!exponents && cap > 0))
        return invalid("null out pointer");
    return wrap([&] {
        dlogfp::FactorMultiset f = dlogfp::factorize(n);
        *count = f.entries.size();
        if (f.entries.size() > cap)
            dlogfp::raise(dlogfp::Status::invalid_argument,
                          "factor buffer too small: need " +
                              std::to_string(f.entries.size()) + " slots");
        size_t i = 0;
        for (auto [prime, exp] : f.entries) {
            primes[i] = prime;
            exponents[i] = exp;
            ++i;
        }
    });
}

dlogfp_status dlogfp_ctx_create(uint64_t p, uint64_t g, dlogfp_ctx** out) {
    if (!out)
        return invalid("null out pointer");
    *out = nullptr;
    return wrap([&] {
        auto ctx = std::make_unique<dlogfp_ctx>(
            dlogfp_ctx{dlogfp::FieldParams::from_generator(p, g)});
        *out = ctx.release();
    });
}

dlogfp_status dlogfp_ctx_create_with_factors(uint64_t p, uint64_t g,
                                             const uint64_t* primes,
                                             const uint32_t* exponents,
                                             size_t count, dlogfp_ctx** out) {
    if (!out || !primes || !exponents)
        return invalid("null pointer argument");
    *out = nullptr;
    return wrap([&] {
        dlogfp::FactorMultiset f;
        for (size_t i = 0; i < count; ++i) {
            if (f.entries.count(primes[i]))
                dlogfp::raise(dlogfp::Status::invalid_argument,
                              "duplicate prime " + std::to_string(primes[i]));
            f.entries[primes[i]] = exponents[i];
        }
        auto ctx = std::make_unique<dlogfp_ctx>(
            dlogfp_ctx{dlogfp::FieldParams(p, g, std::move(f))});
        *out = ctx.release();
    });
}

void dlogfp_ctx_free(dlogfp_ctx* ctx) {
    delete ctx;
}

uint64_t dlogfp_ctx_prime(const dlogfp_ctx* ctx) {
    return ctx ? ctx->params.p() : 0;
}

uint64_t dlogfp_ctx_generator(const dlogfp_ctx* ctx) {
    return ctx ? ctx->params.g() : 0;
}

size_t dlogfp_ctx_factor_count(const dlogfp_ctx* ctx) {
    return ctx ? ctx->params.order_factors().entries.size() : 0;
}

dlogfp_status dlogfp_ctx_factor(const dlogfp_ctx* ctx, size_t index,
                                uint64_t* prime, uint32_t* exponent) {
    if (!ctx || !prime || !exponent)
        return invalid("null pointer argument");
    const auto& entries = ctx->params.order_factors().entries;
    if (index >= entries.size())
        return invalid("factor index out of range");
    auto it = entries.begin();
    std::advance(it, index);
    *prime = it->first;
    *exponent = it->second;
    return DLOGFP_OK;
}

namespace {

dlogfp_status solve_impl(const dlogfp_ctx* ctx, uint64_t h, dlogfp_method method,
                         uint64_t* x, dlogfp_trace** trace_out) {
    if (!ctx || !x)
        return invalid("null pointer argument");
    if (method != DLOGFP_METHOD_TRACEBACK && method != DLOGFP_METHOD_POHLIG)
        return invalid("unknown method");
    return wrap([&] {
        std::unique_ptr<dlogfp_trace> trace;
        if (trace_out) {
            *trace_out = nullptr;
            trace = std::make_unique<dlogfp_trace>();
        }
        if (method == DLOGFP_METHOD_TRACEBACK) {
            dlogfp::TracebackTrace tb;
            *x = dlogfp::solve_traceback(ctx->params, h, trace ? &tb : nullptr);
            if (trace) {
                trace->stack = std::move(tb.stack.elems);
                trace->stages = std::move(tb.stages);
            }
        } else {
            dlogfp::PohligTrace ph;
            *x = dlogfp::solve_pohlig(ctx->params, h, trace ? &ph : nullptr);
            if (trace) {
                trace->stages = std::move(ph.stages);
                trace->congruences = std::move(ph.congruences);
            }
        }
        if (trace_out)
            *trace_out = trace.release();
    });
}

} // namespace

dlogfp_status dlogfp_solve(const dlogfp_ctx* ctx, uint64_t h, dlogfp_method method,
                           uint64_t* x) {
    return solve_impl(ctx, h, method, x, nullptr);
}

dlogfp_status dlogfp_solve_traced(const dlogfp_ctx* ctx, uint64_t h,
                                  dlogfp_method method, uint64_t* x,
                                  dlogfp_trace** trace) {
    if (!trace)
        return invalid("null trace pointer");
    return solve_impl(ctx, h, method, x, trace);
}

void dlogfp_trace_free(dlogfp_trace* trace) {
    delete trace;
}

size_t dlogfp_trace_stack_size(const dlogfp_trace* trace) {
    return trace ? trace->stack.size() : 0;
}

dlogfp_status dlogfp_trace_stack_at(const dlogfp_trace* trace, size_t index,
                                    uint64_t* elem) {
    if (!trace || !elem)
        return invalid("null pointer argument");
    if (index >= trace->stack.size())
        return invalid("stack index out of range");
    *elem = trace->stack[index];
    return DLOGFP_OK;
}

size_t dlogfp_trace_stage_count(const dlogfp_trace* trace) {
    return trace ? trace->stages.size() : 0;
}

dlogfp_status dlogfp_trace_stage_at(const dlogfp_trace* trace, size_t index,
                                    dlogfp_stage* out) {
    if (!trace || !out)
        return invalid("null pointer argument");
    if (index >= trace->stages.size())
        return invalid("stage index out of range");
    const auto& s = trace->stages[index];
    out->factor = s.factor;
    out->k = s.k;
    out->gpow = s.gpow;
    out->delta = s.delta;
    out->target = s.target;
    return DLOGFP_OK;
}

size_t dlogfp_trace_congruence_count(const dlogfp_trace* trace) {
    return trace ? trace->congruences.size() : 0;
}

dlogfp_status dlogfp_trace_congruence_at(const dlogfp_trace* trace, size_t index,
                                         uint64_t* remainder, uint64_t* modulus) {
    if (!trace || !remainder || !modulus)
        return invalid("null pointer argument");
    if (index >= trace->congruences.size())
        return invalid("congruence index out of range");
    *remainder = trace->congruences[index].remainder;
    *modulus = trace->congruences[index].modulus;
    return DLOGFP_OK;
}

} // extern "C"
