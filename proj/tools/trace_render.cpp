#include "trace_render.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

namespace dlogfp_cli {

namespace {

// How many coset candidates to spell out per descent stage before eliding.
constexpr std::uint64_t kCandidateCap = 64;

std::string factorization_line(const dlogfp_ctx* ctx) {
    const std::uint64_t p = dlogfp_ctx_prime(ctx);
    std::ostringstream out;
    out << "p - 1 = " << (p - 1) << " = ";
    const std::size_t count = dlogfp_ctx_factor_count(ctx);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t q = 0;
        std::uint32_t e = 0;
        dlogfp_ctx_factor(ctx, i, &q, &e);
        if (i != 0) {
            out << " * ";
        }
        out << q;
        if (e > 1) {
            out << '^' << e;
        }
    }
    return out.str();
}

std::vector<std::uint64_t> ascending_factor_list(const dlogfp_ctx* ctx) {
    std::vector<std::uint64_t> factors;
    const std::size_t count = dlogfp_ctx_factor_count(ctx);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t q = 0;
        std::uint32_t e = 0;
        dlogfp_ctx_factor(ctx, i, &q, &e);
        for (std::uint32_t j = 0; j < e; ++j) {
            factors.push_back(q);
        }
    }
    return factors;
}

void emit_list(std::ostringstream& out, const std::vector<std::uint64_t>& values) {
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out << ", ";
        }
        out << values[i];
    }
    out << ']';
}

// The full coset delta * <eps> that the stage searched, recomputed here so
// the solver's k = 0 shortcut still prints the list the search would scan.
void emit_candidates(std::ostringstream& out, const dlogfp_ctx* ctx,
                     const dlogfp_stage& stage) {
    const std::uint64_t p = dlogfp_ctx_prime(ctx);
    const std::uint64_t g = dlogfp_ctx_generator(ctx);
    std::uint64_t eps = 0;
    dlogfp_powmod(g, (p - 1) / stage.factor, p, &eps);

    const std::uint64_t shown = stage.factor < kCandidateCap ? stage.factor : kCandidateCap;
    std::vector<std::uint64_t> candidates;
    candidates.reserve(static_cast<std::size_t>(shown));
    std::uint64_t cur = stage.delta;
    for (std::uint64_t j = 0; j < shown; ++j) {
        candidates.push_back(cur);
        dlogfp_mulmod(cur, eps, p, &cur);
    }
    out << '[';
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i != 0) {
            out << ", ";
        }
        out << candidates[i];
    }
    if (shown < stage.factor) {
        out << ", ...";
    }
    out << ']';
}

std::string render_traceback(const dlogfp_ctx* ctx, const dlogfp_trace* trace) {
    std::ostringstream out;
    out << factorization_line(ctx) << '\n';
    out << "powering order: ";
    emit_list(out, ascending_factor_list(ctx));
    out << '\n';

    std::vector<std::uint64_t> stack;
    const std::size_t stack_size = dlogfp_trace_stack_size(trace);
    for (std::size_t i = 0; i < stack_size; ++i) {
        std::uint64_t elem = 0;
        dlogfp_trace_stack_at(trace, i, &elem);
        stack.push_back(elem);
    }
    out << "trace stack: ";
    emit_list(out, stack);
    out << '\n';

    out << "gpow = " << (dlogfp_ctx_prime(ctx) - 1) << '\n';
    const std::size_t stages = dlogfp_trace_stage_count(trace);
    for (std::size_t i = 0; i < stages; ++i) {
        dlogfp_stage stage{};
        dlogfp_trace_stage_at(trace, i, &stage);
        out << "root " << stage.factor << ": delta = " << stage.delta
            << ", candidates = ";
        emit_candidates(out, ctx, stage);
        out << ", matched " << stage.target << ", k = " << stage.k
            << ", gpow = " << stage.gpow << '\n';
    }
    return out.str();
}

std::string render_pohlig(const dlogfp_ctx* ctx, const dlogfp_trace* trace) {
    std::ostringstream out;
    out << factorization_line(ctx) << '\n';

    std::map<std::uint64_t, std::size_t> digit_index;
    const std::size_t stages = dlogfp_trace_stage_count(trace);
    for (std::size_t i = 0; i < stages; ++i) {
        dlogfp_stage stage{};
        dlogfp_trace_stage_at(trace, i, &stage);
        const std::size_t j = digit_index[stage.factor]++;
        out << "q = " << stage.factor << ": digit " << j << " = " << stage.k
            << " (subgroup target " << stage.target << "), partial residue "
            << stage.gpow << '\n';
    }

    const std::size_t congruences = dlogfp_trace_congruence_count(trace);
    out << "congruences:" << '\n';
    for (std::size_t i = 0; i < congruences; ++i) {
        std::uint64_t remainder = 0;
        std::uint64_t modulus = 0;
        dlogfp_trace_congruence_at(trace, i, &remainder, &modulus);
        out << "  x = " << remainder << " (mod " << modulus << ")\n";
    }
    return out.str();
}

} // namespace

std::string render_trace(const dlogfp_ctx* ctx, const dlogfp_trace* trace,
                         dlogfp_method method) {
    return method == DLOGFP_METHOD_TRACEBACK ? render_traceback(ctx, trace)
                                             : render_pohlig(ctx, trace);
}

} // namespace dlogfp_cli
