// dlogfp command line: solve one instance, benchmark a suite, or verify a
// claimed exponent. Exit codes: 0 success, 1 solve/verification failure,
// 2 usage error (bad arguments, invalid instance, unreadable suite).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dlogfp.h"

#include "bench.hpp"
#include "report.hpp"
#include "suite.hpp"
#include "trace_render.hpp"

namespace {

using namespace dlogfp_cli;

constexpr int kExitOk = 0;
constexpr int kExitSolveFailure = 1;
constexpr int kExitUsage = 2;

dlogfp_method parse_method(const std::string& name) {
    if (name == "traceback") {
        return DLOGFP_METHOD_TRACEBACK;
    }
    if (name == "pohlig") {
        return DLOGFP_METHOD_POHLIG;
    }
    throw UsageError("unknown method \"" + name + "\" (expected traceback or pohlig)");
}

int cmd_solve(std::uint64_t p, std::uint64_t g, std::uint64_t h,
              const std::string& method_name, bool with_trace) {
    const dlogfp_method method = parse_method(method_name);

    dlogfp_ctx* ctx = nullptr;
    if (dlogfp_ctx_create(p, g, &ctx) != DLOGFP_OK) {
        std::cerr << "error: " << dlogfp_last_error() << '\n';
        return kExitUsage;
    }

    std::uint64_t x = 0;
    dlogfp_trace* trace = nullptr;
    const auto start = std::chrono::steady_clock::now();
    const dlogfp_status st = with_trace
        ? dlogfp_solve_traced(ctx, h, method, &x, &trace)
        : dlogfp_solve(ctx, h, method, &x);
    const auto stop = std::chrono::steady_clock::now();

    if (st != DLOGFP_OK) {
        std::cerr << "error: " << dlogfp_last_error() << '\n';
        dlogfp_ctx_free(ctx);
        // A value of h outside [1, p) is a caller mistake, not a solver failure.
        return st == DLOGFP_ERR_NOT_IN_GROUP ? kExitUsage : kExitSolveFailure;
    }

    if (with_trace) {
        std::cout << render_trace(ctx, trace, method);
        dlogfp_trace_free(trace);
    }

    std::uint64_t check = 0;
    dlogfp_powmod(g, x, p, &check);
    const auto us = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count() / 1000.0;
    std::cout << "x = " << x << '\n';
    std::cout << "check: " << g << '^' << x << " = " << check << " (mod " << p << ")"
              << (check == h % p ? "" : "  [MISMATCH]") << '\n';
    std::cout << "elapsed: " << us << " us\n";
    dlogfp_ctx_free(ctx);
    return check == h % p ? kExitOk : kExitSolveFailure;
}

int cmd_bench(const std::string& suite_arg, std::uint64_t trials,
              const std::string& format_name, const std::string& out_path) {
    if (trials == 0) {
        throw UsageError("--trials must be at least 1");
    }
    const ReportFormat format = parse_format(format_name);
    const std::vector<BenchInstance> instances = resolve_suite(suite_arg);
    const BenchReport report = run_bench(instances, trials, suite_arg);
    const std::string rendered = render_report(report, format);

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw UsageError("cannot open output file: " + out_path);
        }
        out << rendered;
    }

    if (!all_verified(report)) {
        std::cerr << "error: one or more records failed verification\n";
        return kExitSolveFailure;
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t p, std::uint64_t g, std::uint64_t h, std::uint64_t x) {
    std::uint64_t got = 0;
    if (dlogfp_powmod(g, x, p, &got) != DLOGFP_OK) {
        std::cerr << "error: " << dlogfp_last_error() << '\n';
        return kExitUsage;
    }
    const bool ok = got == h % p;
    std::cout << (ok ? "true" : "false") << ": " << g << '^' << x << " = " << got
              << " (mod " << p << ")\n";
    return ok ? kExitOk : kExitSolveFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete logarithms in F_p* (trace-back and Pohlig-Hellman solvers)"};
    app.require_subcommand(1);
    // --h is an option name here, so no short -h help flag anywhere.
    app.set_help_flag("--help", "print help and exit");

    std::uint64_t p = 0;
    std::uint64_t g = 0;
    std::uint64_t h = 0;
    std::uint64_t x = 0;
    std::string method = "traceback";
    bool with_trace = false;

    CLI::App* solve = app.add_subcommand("solve", "solve g^x = h (mod p) for x");
    solve->set_help_flag("--help", "print help and exit");
    solve->add_option("--p", p, "prime modulus")->required();
    solve->add_option("--g", g, "generator of F_p*")->required();
    solve->add_option("--h", h, "target element")->required();
    solve->add_option("--method", method, "traceback or pohlig")
        ->capture_default_str();
    solve->add_flag("--trace", with_trace, "print per-step diagnostics");

    std::string suite = "paper";
    std::uint64_t trials = 10000;
    std::string format = "table";
    std::string out_path;

    CLI::App* bench = app.add_subcommand("bench", "time both solvers over a suite");
    bench->set_help_flag("--help", "print help and exit");
    bench->add_option("--suite", suite, "paper or file:<path>")->capture_default_str();
    bench->add_option("--trials", trials, "timed iterations per record")
        ->capture_default_str();
    bench->add_option("--format", format, "table, json, or csv")->capture_default_str();
    bench->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "check a claimed exponent");
    verify->set_help_flag("--help", "print help and exit");
    verify->add_option("--p", p, "prime modulus")->required();
    verify->add_option("--g", g, "base")->required();
    verify->add_option("--h", h, "target element")->required();
    verify->add_option("--x", x, "claimed exponent")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 returns 0 for --help and its usage-error code otherwise;
        // collapse the latter onto this tool's usage exit code.
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(p, g, h, method, with_trace);
        }
        if (bench->parsed()) {
            return cmd_bench(suite, trials, format, out_path);
        }
        return cmd_verify(p, g, h, x);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolveFailure;
    }
}
