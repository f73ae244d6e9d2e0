#pragma once

#include <span>
#include <vector>

#include "scottlab/scott/estimate.hpp"

namespace scottlab::scott {

/// S_2 sweep over couplings with monotonicity and profile-independence
/// diagnostics.  A monotonicity violation beyond the tolerance sets the
/// failure flag; the table is still returned in full.
struct ScottTable {
    std::vector<ScottEstimate> rows;  // one ladder per alpha, ascending alpha
    double monotonicity_tol = 0.01;
    bool monotone_ok = true;

    struct ProfileCheck {
        double alpha;
        double s2_primary;
        double s2_alternate;
        std::string alternate_id;
    };
    std::vector<ProfileCheck> profile_checks;
    double max_profile_difference = 0.0;
};

ScottTable scott_table(std::span<const double> alphas, std::span<const double> R_schedule,
                       const core::CutoffProfile& profile, double D_coef,
                       const ScottConfig& cfg = {});

}  // namespace scottlab::scott
