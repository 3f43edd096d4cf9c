#pragma once

#include <string>
#include <vector>

namespace bhepn::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst offender or summary data
};

/// Runs the cross-validation suite over every admissible model with dimension
/// up to n_max: the Fock-space oracle equality, isospectrality against the
/// closed form, symmetry defects, EPN nilpotency, geometric multiplicity,
/// Segre characteristic, Jordan-chain residuals, and the published count
/// tables. Pure; the caller decides how to render the results.
std::vector<CheckResult> run_verification(int n_max);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace bhepn::verify
