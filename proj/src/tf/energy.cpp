#include "scottlab/tf/energy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scottlab/core/quadrature.hpp"
#include "scottlab/simd/kernels.hpp"
#include "scottlab/tf/atom.hpp"

namespace scottlab::tf {

namespace {
constexpr double pi = std::numbers::pi;

// integral over the first cell [0, r1] of a sampled g, power-law fit
double head_cell(double g1, double g2, double r1, double h) {
    if (g1 == 0.0) return 0.0;
    if (g1 * g2 > 0.0) {
        double p = std::log2(g2 / g1);
        if (p < -0.999) p = -0.999;
        if (p > 6.0) p = 6.0;
        return g1 * r1 / (p + 1.0);
    }
    return 0.5 * h * g1;
}

// integral over [r0, r1] of the power-law interpolant (trapezoid fallback)
double power_cell(double r0, double r1, double g0, double g1) {
    if (g0 == 0.0 && g1 == 0.0) return 0.0;
    if (g0 * g1 > 0.0) {
        double p = std::log(g1 / g0) / std::log(r1 / r0);
        if (p > -6.0 && p < 8.0 && std::fabs(p + 1.0) > 1e-9) {
            const double c = g0 / std::pow(r0, p);
            return c * (std::pow(r1, p + 1.0) - std::pow(r0, p + 1.0)) / (p + 1.0);
        }
    }
    return 0.5 * (r1 - r0) * (g0 + g1);
}
}  // namespace

std::vector<double> hartree_potential(std::span<const double> f, const core::RadialGrid& grid,
                                      double outer_tail) {
    const int n = grid.n_points();
    if (static_cast<int>(f.size()) != n)
        throw std::invalid_argument("hartree_potential: sample length does not match grid");
    const double h = grid.spacing();

    // inner_i = int_0^{r_i} f s^2 ds (cumulative trapezoid + first cell)
    std::vector<double> g(n), inner(n), outer(n);
    for (int i = 0; i < n; ++i) {
        const double r = grid.r(i);
        g[i] = f[i] * r * r;
    }
    inner[0] = head_cell(g[0], g[1], grid.r(0), h);
    const int head_cells = std::min(16, n - 1);
    for (int i = 1; i <= head_cells; ++i)
        inner[i] = inner[i - 1] + power_cell(grid.r(i - 1), grid.r(i), g[i - 1], g[i]);
    for (int i = head_cells + 1; i < n; ++i)
        inner[i] = inner[i - 1] + 0.5 * h * (g[i - 1] + g[i]);

    // outer_i = int_{r_i}^{r_n} f s ds (reverse cumulative trapezoid)
    for (int i = 0; i < n; ++i) g[i] = f[i] * grid.r(i);
    outer[n - 1] = 0.0;
    for (int i = n - 2; i >= 0; --i) outer[i] = outer[i + 1] + 0.5 * h * (g[i] + g[i + 1]);

    std::vector<double> phi(n);
    for (int i = 0; i < n; ++i)
        phi[i] = 4.0 * pi * (inner[i] / grid.r(i) + outer[i] + outer_tail);
    return phi;
}

double coulomb_energy(std::span<const double> f, const core::RadialGrid& grid) {
    const std::vector<double> phi = hartree_potential(f, grid);
    std::vector<double> prod(f.size());
    kern::vmul(prod.data(), f.data(), phi.data(), f.size());
    return 0.5 * core::quad_radial(prod, grid);
}

double tf_energy(std::span<const double> rho, double Z, const core::RadialGrid& grid) {
    const int n = grid.n_points();
    if (static_cast<int>(rho.size()) != n)
        throw std::invalid_argument("tf_energy: sample length does not match grid");
    for (int i = 0; i < n; ++i)
        if (rho[i] < 0.0)
            throw std::invalid_argument("tf_energy: negative density sample at node " +
                                        std::to_string(i));

    const double c_kin = 0.3 * std::pow(3.0 * pi * pi, 2.0 / 3.0);
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = std::pow(rho[i], 5.0 / 3.0);
    const double kinetic = c_kin * core::quad_radial(g, grid);
    for (int i = 0; i < n; ++i) g[i] = rho[i] * Z / grid.r(i);
    const double attraction = core::quad_radial(g, grid);
    return kinetic - attraction + coulomb_energy(rho, grid);
}

double sc_energy(std::span<const double> V, std::span<const double> weight,
                 const core::RadialGrid& grid) {
    const int n = grid.n_points();
    if (static_cast<int>(V.size()) != n || static_cast<int>(weight.size()) != n)
        throw std::invalid_argument("sc_energy: sample length does not match grid");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        if (weight[i] < 0.0) throw std::invalid_argument("sc_energy: negative weight sample");
        const double vp = V[i] > 0.0 ? V[i] : 0.0;
        g[i] = weight[i] * vp * vp * std::sqrt(vp);
    }
    const double c_sc = 4.0 * std::sqrt(2.0) / (15.0 * pi * pi);
    return -c_sc * core::quad_radial(g, grid);
}

VtfBounds vtf_bound_constants(const TFAtom& atom) {
    VtfBounds b;
    const int n = atom.grid.n_points();
    const double z43 = std::pow(atom.Z, 4.0 / 3.0);
    for (int i = 0; i < n; ++i) {
        const double r = atom.grid.r(i);
        const double v = atom.v_tf[i];
        b.coulomb_defect_scaled = std::max(b.coulomb_defect_scaled,
                                           std::fabs(v - atom.Z / r) / z43);
        b.rv_over_z = std::max(b.rv_over_z, r * v / atom.Z);
        b.r4v = std::max(b.r4v, r * r * r * r * v);
    }
    return b;
}

}  // namespace scottlab::tf
