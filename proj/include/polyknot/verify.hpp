#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polyknot {

struct CheckResult {
    std::string id;
    bool pass = false;
    double margin = 0.0;  // smallest slack observed; negative slack fails
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyParams {
    std::uint64_t seed = 20240817ULL;
    /// Sample counts scale linearly with this percentage (100 = the counts the
    /// acceptance gate runs with).
    int scale_percent = 100;

    int scaled(int full) const {
        long long v = static_cast<long long>(full) * scale_percent / 100;
        return static_cast<int>(std::max(1LL, v));
    }
};

SuiteResult suite_bezout_bound(const VerifyParams& p);            // shared-condition count bound
SuiteResult suite_infinite_characterization(const VerifyParams&); // reducible-curve pencils
SuiteResult suite_cubic_classification(const VerifyParams& p);    // cubic curve trichotomy
SuiteResult suite_equivariance(const VerifyParams& p);            // scaling/translation action
SuiteResult suite_orderings(const VerifyParams& p);               // breakpoint order relations
SuiteResult suite_reference_quartic(const VerifyParams& p);       // closed-form spot values
SuiteResult suite_fiber_agreement(const VerifyParams& p);         // analytic vs swept fibers
SuiteResult suite_dcell(const VerifyParams& p);                   // even-quartic thresholds
SuiteResult suite_cell_lines(const VerifyParams& p);              // per-cell line structure
SuiteResult suite_critical_pairs(const VerifyParams& p);          // interior tangency count
SuiteResult suite_linking(const VerifyParams& p);                 // orbit cycle linking values
SuiteResult suite_sigma(const VerifyParams& p);                   // discriminant membership

using SuiteFn = SuiteResult (*)(const VerifyParams&);
const std::vector<std::pair<std::string, SuiteFn>>& all_suites();

}  // namespace polyknot
