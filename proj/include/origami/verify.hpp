#pragma once

#include <string>
#include <vector>

#include "origami/census.hpp"
#include "origami/orbit.hpp"

namespace origami {
namespace verify {

struct CriterionResult {
    std::string id;
    std::string description;
    bool pass = false;
    bool informative = false; // recorded, not gated
    /// Set when the only failing clause is one documented as unattainable in
    /// the decisions ledger (the row still prints as a failure).
    bool known_unattainable = false;
    std::string detail;
};

struct VerifyOptions {
    bool slow = false;   // enables the n = 10 brute-force completeness runs
    int workers = 1;
    int max_n = 0;       // 0 = criterion defaults; otherwise clamps every range
    int brute_cap = 10;  // generic enumeration cap
};

struct VerifyReport {
    std::vector<CriterionResult> results;
    /// Gating verdict: informative rows never gate; a failing row gates unless
    /// its only failing clause is a documented-unattainable one.
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.informative && !r.pass && !r.known_unattainable) return false;
        return true;
    }
    bool all_pass_strict() const {
        for (const auto& r : results)
            if (!r.informative && !r.pass) return false;
        return true;
    }
};

/// Suites: "h2", "h11", "prym4", "prym6", "h4", "all".
std::vector<std::string> suite_names();
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);

std::string format_report(const VerifyReport& report);

} // namespace verify
} // namespace origami
