#pragma once

namespace scottlab::ineq {

/// Random check that xi -> sqrt(a^2 + xi^2) - xi is non-increasing on
/// [0, inf) for every real a.
struct MonotoneShiftReport {
    int samples = 0;
    int violations = 0;     // pairs failing to 1e-14
    double worst_gap = 0.0; // min over pairs of f(xi1) - f(xi2), xi1 < xi2
};

MonotoneShiftReport monotone_shift_test(int samples, unsigned seed);

}  // namespace scottlab::ineq
