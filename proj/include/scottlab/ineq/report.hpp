#pragma once

#include <map>
#include <string>
#include <vector>

namespace scottlab::ineq {

/// Outcome of one inequality battery.  `worst_margin` is the minimum over
/// cases of the RHS-normalized slack; `empirical_constant` the smallest C
/// making the family hold over the battery (0 for identities, which need no
/// constant).  Family-specific scalars land in `metrics`.
struct InequalityReport {
    std::string family;
    int cases_run = 0;
    double worst_margin = 0.0;
    double empirical_constant = 0.0;

    struct CaseRow {
        std::string label;
        double lhs = 0.0;
        double rhs = 0.0;
        double ratio = 0.0;   // -lhs / rhs where meaningful
        double margin = 0.0;
    };
    std::vector<CaseRow> cases;
    std::map<std::string, double> metrics;
};

}  // namespace scottlab::ineq
