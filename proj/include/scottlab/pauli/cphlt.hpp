#pragma once

#include <vector>

#include "scottlab/ineq/report.hpp"
#include "scottlab/pauli/gauge.hpp"

namespace scottlab::pauli {

/// One labelled site potential V >= 0 for the critical Pauli-Hardy bound.
struct SitePotential {
    std::string label;
    std::vector<double> values;
};

/// tr(|sigma.(p-A)| - 2/(pi |x|) - V)_- >= -C (int B^2 + int V^4), checked on
/// the torus with the Coulomb term regularized at half a cell and centered at
/// a half-integer site.  |sigma.p_A| is the dense spectral square root of the
/// Pauli matrix (negative roundoff eigenvalues clamped, recorded).  Cases
/// with vanishing right side (V = 0, B = 0) are reported as the lattice Hardy
/// residual and excluded from the fit.
ineq::InequalityReport cphlt_check(const GaugeField& gauge,
                                   const std::vector<SitePotential>& battery,
                                   bool coulomb_center = true);

/// 2/(pi max(|x - center|, a/2)) on the torus, min-image metric.
std::vector<double> hardy_site_potential(const LatticeBox& box);

}  // namespace scottlab::pauli
