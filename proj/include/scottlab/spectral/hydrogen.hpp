#pragma once

#include <vector>

#include "scottlab/core/grid.hpp"

namespace scottlab::spectral {

/// Discretization check against the Coulomb spectrum -1/(2 n^2): lowest 3
/// eigenvalues of the l = 0, 1, 2 channels with potential -1/r on a nested
/// grid ladder, Richardson-extrapolated with the observed second-order rate.
struct HydrogenCheck {
    struct Entry {
        int ell;
        int n_quantum;            // principal quantum number ell+1+k
        double extrapolated;
        double target;            // -1/(2 n^2)
        double error;             // |extrapolated - target|
        std::vector<double> ladder;
        bool monotone;            // |E(h) - target| decreasing along the ladder
    };
    std::vector<Entry> entries;
    double worst_error = 0.0;
    bool all_monotone = true;
};

HydrogenCheck hydrogen_check(const std::vector<core::RadialGrid>& ladder);

}  // namespace scottlab::spectral
