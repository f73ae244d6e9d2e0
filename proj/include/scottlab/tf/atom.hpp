#pragma once

#include <vector>

#include "scottlab/core/grid.hpp"
#include "scottlab/tf/universal.hpp"

namespace scottlab::tf {

/// Neutral Thomas-Fermi atom: V(r) = (Z/r) Phi(r/b), density from the radial
/// Poisson route rho = (rV)''/(4 pi r), which closes the Euler-Lagrange
/// relation (1/2)(3 pi^2)^{2/3} rho^{2/3} = V once the length b is pinned.
struct TFAtom {
    double Z = 0.0;
    core::RadialGrid grid{1.0, 8};
    std::vector<double> rho;
    std::vector<double> v_tf;
    double e_tf = 0.0;   // functional value at rho
    double d_self = 0.0; // D(rho)
    double length_scale = 0.0;  // b
    double mass = 0.0;          // 4 pi int rho r^2 dr including the analytic tail
    double el_residual = 0.0;      // max relative Euler-Lagrange defect over nodes
    double hartree_residual = 0.0; // max relative defect of Z/r - rho*|x|^{-1} vs V (inner half)
};

/// Builds the atom on the given grid.  Throws when the grid cannot hold the
/// Euler-Lagrange relation to 1e-3 relative.
TFAtom tf_atom(double Z, const core::RadialGrid& grid, const UniversalTFSolution& universal);

}  // namespace scottlab::tf
