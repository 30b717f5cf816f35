#pragma once

#include <map>
#include <string>
#include <vector>

#include "hitprob/fixtures.hpp"

namespace hitprob {

enum class CheckStatus { Pass, Fail, Skipped };

struct VerificationResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string expected;
    std::string computed;  // on failure includes a minimal counterexample
    double elapsed_ms = 0.0;
};

/// Runs one of the suites "smoke", "degree20", "degree30", "properties",
/// "all". The degree suites need the appendix fixtures; individual checks
/// whose fixtures are absent come back Skipped rather than silently passing.
std::vector<VerificationResult> run_suite(const std::string& suite,
                                          const std::map<std::string, Fixture>& fixtures);

/// Text table or JSON array; stable field order.
std::string render_report(const std::vector<VerificationResult>& results, bool json);

bool all_passed(const std::vector<VerificationResult>& results);

}  // namespace hitprob
