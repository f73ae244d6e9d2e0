#include "scottlab/core/matrix_function.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "scottlab/simd/kernels.hpp"

namespace scottlab::core {

SymmetricMatrix matrix_function(const EigResult& eig, const std::function<double(double)>& f) {
    const int n = static_cast<int>(eig.values.size());
    std::vector<double> w(n);
    for (int k = 0; k < n; ++k) {
        w[k] = f(eig.values[k]);
        if (!std::isfinite(w[k])) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "matrix_function: map undefined at eigenvalue %.17g",
                          eig.values[k]);
            throw std::runtime_error(buf);
        }
    }
    Matrix scaled(n, n);
    for (int k = 0; k < n; ++k) kern::scale_copy(scaled.col(k), eig.vectors.col(k), w[k], n);
    SymmetricMatrix r(gemm_abt(scaled, eig.vectors));
    r.symmetrize();
    return r;
}

SymmetricMatrix matrix_function(const SymmetricMatrix& m, const std::function<double(double)>& f) {
    return matrix_function(eig_sym(m), f);
}

}  // namespace scottlab::core
