#pragma once

#include <span>
#include <string>
#include <vector>

#include "scottlab/core/cutoff.hpp"

namespace scottlab::scott {

struct ScottConfig {
    double spacing = 0.0;     // 0 = auto: alpha/8 for alpha > 0, 1/64 otherwise
    double box_factor = 4.0;  // box = box_factor * R for nonlocal kinetic models
    double ell_truncation_tol = 1e-6;
    int ell_limit = 200;
    double lambda_field = 0.0;  // recorded only; the A = 0 slice carries no field energy
};

/// One evaluation of tr[phi_R (T_alpha - 1/|x| - D R^{-2} chi_R) phi_R]_-
/// minus I_R; the numerical surrogate of 2 S_2(alpha), halved.
struct ScottEstimate {
    double alpha = 0.0;
    double R = 0.0;
    double D_coef = 0.0;
    double lambda_field = 0.0;
    double trace_value = 0.0;
    double i_r_value = 0.0;
    double s2_estimate = 0.0;       // (trace - I_R)/2 at the largest R run
    double err_bar = 0.0;           // |last successive difference| over the R ladder
    double s2_extrapolated = 0.0;   // least-squares fit in 1/sqrt(R), last 3 points
    int ell_max_used = 0;
    double tail_estimate = 0.0;
    double grid_spacing = 0.0;
    int grid_points = 0;
    std::string profile_id;

    struct Step {
        double R, trace, i_r, s2;
        int ell_max;
        double tail;
    };
    std::vector<Step> history;
};

/// Single (alpha, R) cell.  alpha = 0 selects the nonrelativistic model;
/// alpha > 0 requires spacing <= alpha/8 (rejected otherwise, reporting the
/// required spacing).  R >= 4.
ScottEstimate scott_estimate(double alpha, double R, double D_coef,
                             const core::CutoffProfile& profile, const ScottConfig& cfg = {});

/// Ascending R ladder with convergence history, error bar and extrapolation.
ScottEstimate scott_ladder(double alpha, std::span<const double> R_schedule, double D_coef,
                           const core::CutoffProfile& profile, const ScottConfig& cfg = {});

}  // namespace scottlab::scott
