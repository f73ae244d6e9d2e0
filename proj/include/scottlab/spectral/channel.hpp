#pragma once

#include <vector>

#include "scottlab/core/grid.hpp"
#include "scottlab/core/matrix.hpp"

namespace scottlab::spectral {

/// Angular-momentum channel acting on reduced wavefunctions u = r psi with
/// Dirichlet ends: kinetic = -d^2/dr^2 (3-point stencil) + l(l+1)/r^2, stored
/// tridiagonally, plus a diagonal potential sampled on the grid.
struct ChannelOperator {
    int ell = 0;
    core::RadialGrid grid{1.0, 8};
    std::vector<double> kinetic_diag;
    std::vector<double> kinetic_off;  // length n-1, constant -1/h^2
    std::vector<double> potential;

    core::SymmetricMatrix kinetic_dense() const;
    /// kinetic/2 + diag(potential), the nonrelativistic channel Hamiltonian
    core::SymmetricMatrix hamiltonian_nonrelativistic_dense() const;
};

/// Rejects negative ell and sample-length mismatches.
ChannelOperator build_channel(const core::RadialGrid& grid, int ell,
                              std::vector<double> potential);

}  // namespace scottlab::spectral
