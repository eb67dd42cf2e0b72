// Benchmark suites: the built-in three-instance suite and JSON suite files.

#ifndef DLOGFP_TOOLS_SUITE_HPP
#define DLOGFP_TOOLS_SUITE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlogfp_cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BenchInstance {
    std::uint64_t p;
    std::uint64_t g;
    std::uint64_t h;
    std::optional<std::uint64_t> expected_x;
};

/// The built-in "paper" suite: three smooth-order instances with known
/// exponents, from a 6-bit prime up to the primorial prime 31# + 1.
std::vector<BenchInstance> paper_suite();

/// Parses a suite file: a JSON array of {"p":..,"g":..,"h":..} objects,
/// each with an optional "expected_x". Throws UsageError on anything
/// unreadable.
std::vector<BenchInstance> load_suite_file(const std::string& path);

/// Resolves a --suite argument: "paper" or "file:<path>".
std::vector<BenchInstance> resolve_suite(const std::string& suite_arg);

} // namespace dlogfp_cli

#endif
