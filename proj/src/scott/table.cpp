#include "scottlab/scott/table.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scottlab::scott {

ScottTable scott_table(std::span<const double> alphas, std::span<const double> R_schedule,
                       const core::CutoffProfile& profile, double D_coef,
                       const ScottConfig& cfg) {
    if (alphas.empty()) throw std::invalid_argument("scott_table: empty alpha list");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] < 0.0 || alphas[i] > 2.0 / std::numbers::pi + 1e-12)
            throw std::invalid_argument("scott_table: alphas must lie in [0, 2/pi]");
        if (i > 0 && alphas[i] <= alphas[i - 1])
            throw std::invalid_argument("scott_table: alphas must be sorted ascending");
    }

    ScottTable table;
    for (double a : alphas)
        table.rows.push_back(scott_ladder(a, R_schedule, D_coef, profile, cfg));

    for (std::size_t i = 1; i < table.rows.size(); ++i)
        if (table.rows[i].s2_extrapolated >
            table.rows[i - 1].s2_extrapolated + table.monotonicity_tol)
            table.monotone_ok = false;

    // profile independence, spot-checked at the two endpoint couplings
    const core::CutoffProfile alternate =
        profile.kind() == core::CutoffProfile::Kind::smoothstep5
            ? core::CutoffProfile(core::CutoffProfile::Kind::smoothstep7)
            : core::CutoffProfile(core::CutoffProfile::Kind::smoothstep5);
    std::vector<std::size_t> picks = {0};
    if (table.rows.size() > 1) picks.push_back(table.rows.size() - 1);
    for (std::size_t idx : picks) {
        const ScottEstimate alt =
            scott_ladder(alphas[idx], R_schedule, D_coef, alternate, cfg);
        ScottTable::ProfileCheck chk;
        chk.alpha = alphas[idx];
        chk.s2_primary = table.rows[idx].s2_extrapolated;
        chk.s2_alternate = alt.s2_extrapolated;
        chk.alternate_id = std::string(alternate.id());
        table.max_profile_difference = std::max(
            table.max_profile_difference, std::fabs(chk.s2_primary - chk.s2_alternate));
        table.profile_checks.push_back(std::move(chk));
    }
    return table;
}

}  // namespace scottlab::scott
