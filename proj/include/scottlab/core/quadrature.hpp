#pragma once

#include <span>

#include "scottlab/core/grid.hpp"

namespace scottlab::core {

/// 4*pi * integral_0^{r_n} f(r) r^2 dr from samples on the grid nodes.
/// Composite trapezoid on [r_1, r_n] plus a power-law fit over the first cell
/// [0, r_1], which keeps integrable endpoint singularities (f ~ r^p, p > -2)
/// at quadrature accuracy.  Rejects length mismatches.
double quad_radial(std::span<const double> f, const RadialGrid& grid);

/// Plain composite trapezoid over the nodes, spacing h (no endpoint cells).
double trapezoid(std::span<const double> g, double h);

/// One Richardson step for a method of the given order: coarse at h, fine at h/2.
inline double richardson(double coarse, double fine, int order) {
    const double w = static_cast<double>(1 << order);
    return (w * fine - coarse) / (w - 1.0);
}

}  // namespace scottlab::core
