// verify.hpp
// Exhaustive invariant suite over all sixteen two-bit functions.

#pragma once

#include "evenodd/gates.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace evenodd {

struct VerifyOptions {
    double tolerance = kTolerance;
    // Circuits are run with these Hadamards; substituting a wrong gate must
    // make the suite fail.
    gates::HadamardSet hadamards = gates::standard_hadamards();
};

struct InvariantResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;  // "expected ..., got ..." lines
};

struct VerifyReport {
    std::vector<InvariantResult> invariants;
    int functions_verified = 0;  // functions passing every per-function check
    int classical_min_queries = 0;

    bool passed() const;
    std::string summary() const;  // "16/16 functions verified, classical_min_queries=4"
};

VerifyReport run_verification(const VerifyOptions& options = {});

std::string render_text(const VerifyReport& report);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace evenodd
