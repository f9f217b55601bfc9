#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "f1arr/errors.hpp"
#include "f1arr/numbers.hpp"

namespace f1arr {

// Machine reports use insertion-ordered JSON with no timestamps, so the same
// input always serializes to the same bytes.
using Json = nlohmann::ordered_json;

enum class CharpolyMethod { Mobius, Delres, Both };

CharpolyMethod parse_method(const std::string& name);

struct Report {
    Json machine;
    std::string human;
};

struct OracleOptions {
    bool enabled = false;
    std::optional<std::uint64_t> q;  // prime; picked automatically when absent
    Int budget = Int(100000000);
};

Report run_charpoly(const std::string& file_text, CharpolyMethod method);

Report run_f1(const std::string& file_text, const OracleOptions& oracle = {});

struct GraphRunResult {
    Report report;
    std::string arrangement_text;  // serialized cycle arrangement, for --emit-arrangement
};

GraphRunResult run_graph(const std::string& file_text, const OracleOptions& oracle = {});

Report run_count(const std::string& file_text, std::uint64_t q,
                 const Int& budget = Int(100000000));

// 0 success, 1 invariant violation, 2 input error, 3 budget exceeded.
int exit_code_for(ErrorKind kind);

}  // namespace f1arr
