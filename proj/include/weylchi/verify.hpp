#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylchi/partition.hpp"

namespace weylchi {

struct VerificationFailure {
    Partition mu;
    Partition lambda;
    std::string detail;
};

struct VerificationReport {
    std::string check_name;
    std::size_t pairs_tested = 0;
    std::vector<VerificationFailure> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

/// Check names in their fixed run order.
const std::vector<std::string>& verification_check_names();

struct VerifyOptions {
    /// Largest degree swept. gl2 and hooks use it as the bound on a+b.
    int max_degree = 10;
    /// Unequal-degree pairs in the triviality check stop at
    /// min(max_degree, unequal_degree_cap).
    int unequal_degree_cap = 8;
    /// Empty means every check.
    std::vector<std::string> checks;
    unsigned jobs = 1;
};

/// Throws std::invalid_argument naming an unknown check.
std::vector<VerificationReport> run_verification(const VerifyOptions& options);

/// Runs a single named check.
VerificationReport run_check(const std::string& name, const VerifyOptions& options);

/// Elapsed times are left out unless with_timing is set, so reports from
/// different runs compare byte for byte.
std::string render_text(const std::vector<VerificationReport>& reports, bool with_timing = false);
nlohmann::json to_json(const std::vector<VerificationReport>& reports, bool with_timing = false);

}  // namespace weylchi
