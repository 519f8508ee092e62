#pragma once

// Randomized property harness behind `qfourier verify`.
//
// Every check runs over `trials` random inputs. Even trials use the standard
// axes (i, j); odd trials draw a random orthonormal pair. A check records the
// largest normalized error it observed and passes when that stays within its
// tolerance. Report-only checks record a number and never fail.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qfourier::cli {

struct VerifyOptions {
    std::string group = "8";
    int trials = 25;
    std::uint64_t seed = 42;
    /// Replaces every check's own tolerance when set.
    std::optional<double> tolerance;
    /// Test hook: perturbs the fast right-sided transform used by the checks.
    bool inject_fault = false;
};

struct CheckRecord {
    std::string name;
    std::string description;
    std::string group;
    std::string axes;
    int trials = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool report_only = false;
    /// Empty unless the check did not run.
    std::string skipped;
    std::string note;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::string group;
    int trials = 0;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
};

/// Throws std::invalid_argument for a malformed group or negative trials.
VerifyReport run_verify(const VerifyOptions& options);

std::string format_text(const VerifyReport& report);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace qfourier::cli
