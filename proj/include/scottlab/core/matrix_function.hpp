#pragma once

#include <functional>

#include "scottlab/core/eig.hpp"
#include "scottlab/core/matrix.hpp"

namespace scottlab::core {

/// f(m) = V diag(f(lambda)) V^T by spectral calculus.  Rejects maps that are
/// undefined (NaN/inf) on the spectrum, reporting the offending eigenvalue.
SymmetricMatrix matrix_function(const SymmetricMatrix& m, const std::function<double(double)>& f);

/// Same, reusing an existing decomposition of m.
SymmetricMatrix matrix_function(const EigResult& eig, const std::function<double(double)>& f);

}  // namespace scottlab::core
