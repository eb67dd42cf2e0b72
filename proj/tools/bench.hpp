// Timing harness: runs both solvers over a suite and collects per-record
// statistics. Timings cover dlogfp_solve only; context construction (and
// with it the group-order factorization) happens once per instance, outside
// the timed region.

#ifndef DLOGFP_TOOLS_BENCH_HPP
#define DLOGFP_TOOLS_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "suite.hpp"

namespace dlogfp_cli {

struct BenchRecord {
    std::uint64_t p;
    std::uint64_t g;
    std::uint64_t h;
    std::string method;
    std::uint64_t trials;
    double mean_us;
    double median_us;
    double min_us;
    std::uint64_t x;
    bool verified;
};

struct BenchReport {
    std::string suite;
    std::string environment;
    std::vector<BenchRecord> records;
};

/// One-line description of the machine the numbers came from.
std::string bench_environment();

/// Runs every suite instance under both methods, `trials` timed iterations
/// each after min(100, trials) warmup calls. A record is verified when
/// g^x = h (mod p) and, if the instance carries an expected exponent, x
/// matches it. Solver or context errors mark the record unverified instead
/// of aborting, so a report is always produced; suite-shaped problems
/// (p out of range, g not a generator) throw UsageError.
BenchReport run_bench(const std::vector<BenchInstance>& instances,
                      std::uint64_t trials,
                      const std::string& suite_name);

/// True when every record in the report verified.
bool all_verified(const BenchReport& report);

} // namespace dlogfp_cli

#endif
