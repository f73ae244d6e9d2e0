#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scottlab/ineq/report.hpp"

namespace scottlab::ineq {

/// Radial well U >= 0 entering a negative-trace bound battery.
struct RadialWell {
    std::string label;
    std::function<double(double)> U;
};

struct WellTraceConfig {
    double spacing = 0.025;
    double box = 10.0;
    double ell_truncation_tol = 1e-6;
};

/// Field-free Daubechies bound: tr[sqrt(p^2/a^2 + 1/a^4) - 1/a^2 - U]_- >=
/// -C (int U^{5/2} + a^3 int U^4).  Reports the smallest C covering the
/// battery; stability is probed by rerunning at half the spacing.
InequalityReport daubechies_constant(double alpha, const std::vector<RadialWell>& battery,
                                     const WellTraceConfig& cfg = {});

/// Fitted constants at spacing h and h/2 plus their drift ratio.
struct RefinementDrift {
    InequalityReport coarse;
    InequalityReport fine;
    double drift = 0.0;  // max(C_f/C_c, C_c/C_f)
};
RefinementDrift daubechies_stability(double alpha, const std::vector<RadialWell>& battery,
                                     const WellTraceConfig& cfg = {});

}  // namespace scottlab::ineq
