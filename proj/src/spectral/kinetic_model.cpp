#include "scottlab/spectral/kinetic_model.hpp"

#include <cmath>
#include <stdexcept>

#include "scottlab/simd/kernels.hpp"

namespace scottlab::spectral {

KineticModel KineticModel::chandrasekhar(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("KineticModel::chandrasekhar: alpha must be positive");
    return {Kind::chandrasekhar, alpha};
}

double KineticModel::symbol(double t) const {
    switch (kind) {
        case Kind::nonrelativistic: return 0.5 * t;
        case Kind::massless: return std::sqrt(t > 0.0 ? t : 0.0);
        case Kind::chandrasekhar: {
            const double ia2 = 1.0 / (alpha * alpha);
            return std::sqrt(ia2 * t + ia2 * ia2) - ia2;
        }
    }
    return 0.0;
}

void KineticModel::symbol_batch(double* dst, const double* t, std::size_t n) const {
    switch (kind) {
        case Kind::nonrelativistic:
            kern::scale_copy(dst, t, 0.5, n);
            return;
        case Kind::massless:
            kern::sqrt_clamped(dst, t, n);
            return;
        case Kind::chandrasekhar:
            kern::chandrasekhar_symbol(dst, t, alpha, n);
            return;
    }
}

std::string_view KineticModel::name() const {
    switch (kind) {
        case Kind::nonrelativistic: return "nonrelativistic";
        case Kind::massless: return "massless";
        case Kind::chandrasekhar: return "chandrasekhar";
    }
    return "?";
}

}  // namespace scottlab::spectral
