#pragma once

#include <vector>

#include "scottlab/core/grid.hpp"

namespace scottlab::spectral {

/// Minimum eigenvalue of the l=0 massless channel sqrt(-d^2/dr^2) - c/r on
/// each ladder grid.  At c <= 2/pi the sequence stays near zero; above the
/// critical coupling it collapses roughly like -1/spacing.
std::vector<double> hardy_min_eig(double c, const std::vector<core::RadialGrid>& ladder);

struct HardyReport {
    double coupling = 0.0;
    std::vector<double> spacings;
    std::vector<double> min_eigs;
    bool divergence_signature = false;  // >= 4x growth coarse -> fine, below -0.02
};

HardyReport hardy_report(double c, const std::vector<core::RadialGrid>& ladder);

}  // namespace scottlab::spectral
