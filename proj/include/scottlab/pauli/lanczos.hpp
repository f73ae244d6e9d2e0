#pragma once

#include "scottlab/pauli/spinor.hpp"

namespace scottlab::pauli {

/// Matrix-free Lanczos estimate of the smallest eigenvalue.  Plain three-term
/// recurrence (no reorthogonalization); the Ritz pair is validated by an
/// explicit residual ||H v - theta v||, which is immune to ghost duplicates.
struct LanczosResult {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

LanczosResult lanczos_min_eig(const SpinorOperator& op, int max_iter, unsigned seed,
                              double tol = 1e-8);

}  // namespace scottlab::pauli
