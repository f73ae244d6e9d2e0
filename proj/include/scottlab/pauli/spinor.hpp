#pragma once

#include <complex>
#include <vector>

#include "scottlab/core/matrix.hpp"
#include "scottlab/pauli/gauge.hpp"

namespace scottlab::pauli {

/// Lattice Pauli quadratic form (p - A)^2 - sigma.B + V: magnetic hopping
/// Laplacian tensored with the spin identity, minus the Zeeman site term,
/// plus a diagonal potential.  Two spinor components per site, index
/// 2*site + spin.
struct SpinorOperator {
    GaugeField gauge;
    std::vector<double> potential;  // per site

    int dim() const { return 2 * gauge.box.n_sites(); }

    /// y = H x, matrix-free (used by the Lanczos path at large N)
    void apply(const std::complex<double>* x, std::complex<double>* y) const;

    /// Dense Hermitian matrix; guarded (throws beyond order 6912).
    core::CplxMatrix dense() const;
};

SpinorOperator build_pauli(GaugeField gauge, std::vector<double> potential);

}  // namespace scottlab::pauli
