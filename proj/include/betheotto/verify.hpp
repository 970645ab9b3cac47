#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Cross-validation and invariant suite behind `betheotto verify`: oracle
// agreement, finite-difference Jacobian checks, thermodynamic identities,
// scaling covariance and the closed-form limits. Every check is independent
// and reports one pass/fail line.

namespace betheotto {

struct VerifyOptions {
    bool quick = false; // N = 2 subset, smaller diagonalization cutoff
    bool inject_bad_jacobian = false; // debug: corrupt one Jacobian entry so
                                      // the finite-difference check must fail
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts, std::ostream& log);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace betheotto
