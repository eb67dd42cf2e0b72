#include "suite.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dlogfp_cli {

std::vector<BenchInstance> paper_suite() {
    return {
        {41ULL, 13ULL, 8ULL, 18ULL},
        {8101ULL, 6ULL, 7531ULL, 6689ULL},
        {200560490131ULL, 79ULL, 23ULL, 127013812855ULL},
    };
}

namespace {

std::uint64_t require_u64(const nlohmann::json& obj, const char* key, std::size_t index) {
    if (!obj.contains(key)) {
        std::ostringstream msg;
        msg << "suite entry " << index << " is missing \"" << key << '"';
        throw UsageError(msg.str());
    }
    const auto& value = obj.at(key);
    if (!value.is_number_unsigned()) {
        std::ostringstream msg;
        msg << "suite entry " << index << ": \"" << key << "\" must be a non-negative integer";
        throw UsageError(msg.str());
    }
    return value.get<std::uint64_t>();
}

} // namespace

std::vector<BenchInstance> load_suite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open suite file: " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("suite file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw UsageError("suite file " + path + " must be a non-empty JSON array");
    }

    std::vector<BenchInstance> instances;
    instances.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& entry = doc[i];
        if (!entry.is_object()) {
            std::ostringstream msg;
            msg << "suite entry " << i << " must be an object";
            throw UsageError(msg.str());
        }
        BenchInstance inst{};
        inst.p = require_u64(entry, "p", i);
        inst.g = require_u64(entry, "g", i);
        inst.h = require_u64(entry, "h", i);
        if (entry.contains("expected_x")) {
            if (!entry.at("expected_x").is_number_unsigned()) {
                std::ostringstream msg;
                msg << "suite entry " << i << ": \"expected_x\" must be a non-negative integer";
                throw UsageError(msg.str());
            }
            inst.expected_x = entry.at("expected_x").get<std::uint64_t>();
        }
        instances.push_back(inst);
    }
    return instances;
}

std::vector<BenchInstance> resolve_suite(const std::string& suite_arg) {
    if (suite_arg == "paper") {
        return paper_suite();
    }
    constexpr const char* kFilePrefix = "file:";
    if (suite_arg.rfind(kFilePrefix, 0) == 0) {
        return load_suite_file(suite_arg.substr(5));
    }
    throw UsageError("unknown suite \"" + suite_arg + "\" (expected \"paper\" or \"file:<path>\")");
}

} // namespace dlogfp_cli
