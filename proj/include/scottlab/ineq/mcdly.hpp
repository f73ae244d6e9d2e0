#pragma once

#include "scottlab/ineq/daubechies.hpp"
#include "scottlab/ineq/report.hpp"

namespace scottlab::ineq {

/// Combined Daubechies-Lieb-Yau bound at zero field, single center:
/// W >= -(nu/r) 1_{r < alpha} - U with nu*alpha <= 2/pi gives
/// tr[T_alpha + W]_- >= -C nu^{5/2} alpha^{1/2} - C int U^{5/2} - C alpha^3 int U^4.
/// Reports the single fitted C over the battery; when nu*alpha <= 1/64 the
/// fit without the constant term is reported alongside
/// (metrics "constant_free_fit" and "constant_term_needed").
InequalityReport mcdly_constant(double alpha, double nu, const std::vector<RadialWell>& battery,
                                const WellTraceConfig& cfg = {});

RefinementDrift mcdly_stability(double alpha, double nu, const std::vector<RadialWell>& battery,
                                const WellTraceConfig& cfg = {});

}  // namespace scottlab::ineq
