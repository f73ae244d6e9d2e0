#pragma once

#include <vector>

namespace scottlab::tf {

/// Semiclassical parameter map for a molecule of normalized charges z_k
/// (summing to 1): kappa = min_k 2/(pi z_k), h = kappa^{1/2} Z^{-1/3},
/// beta = Z^{2/3} alpha kappa^{-1/2}.  beta/h = Z alpha / kappa <= 1 exactly
/// when max_k(Z z_k alpha) <= 2/pi.
struct SemiclassicalParams {
    std::vector<double> z;
    double Z_total = 0.0;
    double alpha = 0.0;
    double kappa = 0.0;
    double h = 0.0;
    double beta = 0.0;
    bool critical = false;  // max_k(Z z_k alpha) == 2/pi to 1e-12
};

SemiclassicalParams semiclassical_params(double Z_total, std::vector<double> z, double alpha);

}  // namespace scottlab::tf
