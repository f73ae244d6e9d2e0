#pragma once

#include <cstddef>
#include <string_view>

namespace scottlab::spectral {

/// Scalar symbol applied to the channel kinetic matrix (which carries the
/// full -d^2/dr^2 + l(l+1)/r^2, so the map acts on the 3D momentum square).
///
///   nonrelativistic: t/2
///   massless:        sqrt(t)
///   chandrasekhar:   sqrt(t/alpha^2 + 1/alpha^4) - 1/alpha^2
///
/// Each maps [0,inf) to [0,inf) with f(0) = 0, non-decreasing.  The
/// chandrasekhar symbol is non-increasing in alpha, dominated by t/2, and
/// alpha * f_alpha(t) <= sqrt(t) (the massive-vs-massless comparison; the
/// alpha^{-1} prefactor separates the two relativistic normalizations).
struct KineticModel {
    enum class Kind { nonrelativistic, massless, chandrasekhar };

    Kind kind = Kind::nonrelativistic;
    double alpha = 0.0;

    static KineticModel nonrelativistic() { return {Kind::nonrelativistic, 0.0}; }
    static KineticModel massless() { return {Kind::massless, 0.0}; }
    static KineticModel chandrasekhar(double alpha);

    double symbol(double t) const;
    void symbol_batch(double* dst, const double* t, std::size_t n) const;
    std::string_view name() const;
};

}  // namespace scottlab::spectral
