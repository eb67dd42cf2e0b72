#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <sys/utsname.h>

#include "dlogfp.h"

namespace dlogfp_cli {

namespace {

constexpr std::uint64_t kWarmupCap = 100;

std::string compiler_id() {
#if defined(__clang__)
    return std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    return std::string("gcc ") + __VERSION__;
#else
    return "unknown compiler";
#endif
}

std::string machine_id() {
    utsname uts{};
    if (uname(&uts) != 0) {
        return "unknown machine";
    }
    std::ostringstream out;
    out << uts.sysname << ' ' << uts.release << ' ' << uts.machine;
    return out.str();
}

struct Stats {
    double mean_us;
    double median_us;
    double min_us;
};

Stats summarize(std::vector<double>& samples_us) {
    std::sort(samples_us.begin(), samples_us.end());
    double total = 0.0;
    for (double s : samples_us) {
        total += s;
    }
    const std::size_t n = samples_us.size();
    const double median = (n % 2 == 1)
        ? samples_us[n / 2]
        : 0.5 * (samples_us[n / 2 - 1] + samples_us[n / 2]);
    return {total / static_cast<double>(n), median, samples_us.front()};
}

BenchRecord run_one(dlogfp_ctx* ctx, const BenchInstance& inst, dlogfp_method method,
                    const char* method_name, std::uint64_t trials) {
    BenchRecord rec{};
    rec.p = inst.p;
    rec.g = inst.g;
    rec.h = inst.h;
    rec.method = method_name;
    rec.trials = trials;

    std::uint64_t x = 0;
    const std::uint64_t warmup = std::min(kWarmupCap, trials);
    for (std::uint64_t i = 0; i < warmup; ++i) {
        if (dlogfp_solve(ctx, inst.h, method, &x) != DLOGFP_OK) {
            return rec; // unverified, zero stats
        }
    }

    std::vector<double> samples_us;
    samples_us.reserve(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const dlogfp_status st = dlogfp_solve(ctx, inst.h, method, &x);
        const auto stop = std::chrono::steady_clock::now();
        if (st != DLOGFP_OK) {
            return rec;
        }
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
        samples_us.push_back(static_cast<double>(ns.count()) / 1000.0);
    }

    const Stats stats = summarize(samples_us);
    rec.mean_us = stats.mean_us;
    rec.median_us = stats.median_us;
    rec.min_us = stats.min_us;
    rec.x = x;

    std::uint64_t check = 0;
    rec.verified = dlogfp_powmod(inst.g, x, inst.p, &check) == DLOGFP_OK
        && check == inst.h % inst.p
        && (!inst.expected_x || x == *inst.expected_x);
    return rec;
}

} // namespace

std::string bench_environment() {
    std::ostringstream out;
    out << compiler_id() << "; " << machine_id()
        << "; single-threaded; timings cover the solve call only"
           " (validation and group-order factorization excluded)";
    return out.str();
}

BenchReport run_bench(const std::vector<BenchInstance>& instances,
                      std::uint64_t trials,
                      const std::string& suite_name) {
    BenchReport report;
    report.suite = suite_name;
    report.environment = bench_environment();
    report.records.reserve(instances.size() * 2);

    for (const BenchInstance& inst : instances) {
        dlogfp_ctx* ctx = nullptr;
        if (dlogfp_ctx_create(inst.p, inst.g, &ctx) != DLOGFP_OK) {
            std::ostringstream msg;
            msg << "suite instance p=" << inst.p << " g=" << inst.g
                << " rejected: " << dlogfp_last_error();
            throw UsageError(msg.str());
        }
        report.records.push_back(run_one(ctx, inst, DLOGFP_METHOD_TRACEBACK, "traceback", trials));
        report.records.push_back(run_one(ctx, inst, DLOGFP_METHOD_POHLIG, "pohlig", trials));
        dlogfp_ctx_free(ctx);
    }
    return report;
}

bool all_verified(const BenchReport& report) {
    return std::all_of(report.records.begin(), report.records.end(),
                       [](const BenchRecord& r) { return r.verified; });
}

} // namespace dlogfp_cli
