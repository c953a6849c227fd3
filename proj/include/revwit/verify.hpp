#pragma once

#include <string>
#include <vector>

#include "revwit/engine.hpp"

namespace revwit {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct VerifyReport {
    bool ok = true;
    std::vector<CheckResult> checks;
};

// Replays a certificate against a fresh structure instance and checks, in
// order: identifiers, seed validity and shape, the step schedule (alternation
// and least-uncovered targets), every extension (injective order-preserving,
// fresh), the strategy invariant (domain ideals closed / bound evolution /
// convexity / poset replay), the final map, the witness, bounds, and coverage.
// Stops at the first failure; any exception inside a check fails that check.
VerifyReport verify_certificate(const Certificate& c);

// One line per check: "ok <name>" / "FAIL <name>: <detail>".
std::string verify_report_text(const VerifyReport& r);

}  // namespace revwit
