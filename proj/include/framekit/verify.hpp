#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framekit/frame.hpp"
#include "framekit/operator_frame.hpp"

namespace framekit {

struct CheckResult {
    std::string check;
    std::size_t instance_index = 0;
    std::string instance;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> results;   // sorted by check name, then instance index
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool all_pass() const { return failed == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 50;            // random instances per check
    std::vector<Frame> user_frames;
    std::vector<OperatorFrame> user_operator_frames;
};

// Runs the whole property suite: every check draws its own deterministic
// instance stream from (seed, check name, trial), so a fixed seed yields a
// byte-identical report. A check that throws is recorded as a failing
// instance, never a crash. Throws Error when there are no instances at all
// (trials == 0 and no user inputs).
VerifyReport run_verification(const VerifyOptions& opts);

// One aggregated line per check plus a summary.
std::string render_text(const VerifyReport& report);

// Full per-instance JSON document.
std::string render_machine(const VerifyReport& report);

} // namespace framekit
