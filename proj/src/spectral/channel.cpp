#include "scottlab/spectral/channel.hpp"

#include <stdexcept>

namespace scottlab::spectral {

ChannelOperator build_channel(const core::RadialGrid& grid, int ell,
                              std::vector<double> potential) {
    if (ell < 0) throw std::invalid_argument("build_channel: ell must be >= 0");
    if (static_cast<int>(potential.size()) != grid.n_points())
        throw std::invalid_argument("build_channel: potential length does not match grid");

    ChannelOperator op;
    op.ell = ell;
    op.grid = grid;
    op.potential = std::move(potential);
    const int n = grid.n_points();
    const double h2 = grid.spacing() * grid.spacing();
    const double cf = static_cast<double>(ell) * (ell + 1);
    op.kinetic_diag.resize(n);
    op.kinetic_off.assign(n - 1, -1.0 / h2);
    for (int i = 0; i < n; ++i) {
        const double r = grid.r(i);
        op.kinetic_diag[i] = 2.0 / h2 + cf / (r * r);
    }
    return op;
}

core::SymmetricMatrix ChannelOperator::kinetic_dense() const {
    const int n = grid.n_points();
    core::SymmetricMatrix k(n);
    for (int i = 0; i < n; ++i) k(i, i) = kinetic_diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        k(i, i + 1) = kinetic_off[i];
        k(i + 1, i) = kinetic_off[i];
    }
    return k;
}

core::SymmetricMatrix ChannelOperator::hamiltonian_nonrelativistic_dense() const {
    const int n = grid.n_points();
    core::SymmetricMatrix h(n);
    for (int i = 0; i < n; ++i) h(i, i) = 0.5 * kinetic_diag[i] + potential[i];
    for (int i = 0; i + 1 < n; ++i) {
        h(i, i + 1) = 0.5 * kinetic_off[i];
        h(i + 1, i) = 0.5 * kinetic_off[i];
    }
    return h;
}

}  // namespace scottlab::spectral
