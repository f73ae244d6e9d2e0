#include "scottlab/core/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "scottlab/simd/kernels.hpp"

namespace scottlab::core {

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SymmetricMatrix: matrix not square");
}

double SymmetricMatrix::max_abs() const {
    return kern::max_abs(m_.data(), m_.size());
}

double SymmetricMatrix::max_asymmetry() const {
    const int n = order();
    double d = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) d = std::max(d, std::fabs(m_(i, j) - m_(j, i)));
    return d;
}

bool SymmetricMatrix::is_symmetric() const {
    return max_asymmetry() <= 1e-12 * max_abs();
}

void SymmetricMatrix::symmetrize() {
    const int n = order();
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            const double v = 0.5 * (m_(i, j) + m_(j, i));
            m_(i, j) = v;
            m_(j, i) = v;
        }
}

double CplxMatrix::max_hermiticity_defect() const {
    double d = 0.0;
    for (int j = 0; j < cols_; ++j)
        for (int i = j; i < rows_; ++i)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

}  // namespace scottlab::core
