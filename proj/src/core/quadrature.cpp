#include "scottlab/core/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "scottlab/simd/kernels.hpp"

namespace scottlab::core {

double trapezoid(std::span<const double> g, double h) {
    if (g.size() < 2) return 0.0;
    double s = kern::sum(g.data(), g.size());
    s -= 0.5 * (g.front() + g.back());
    return h * s;
}

namespace {

// local power through two nodes
double local_power(double r0, double r1, double g0, double g1) {
    return std::log(g1 / g0) / std::log(r1 / r0);
}

// integral of the power-law interpolant through (r0, g0), (r1, g1); falls
// back to the trapezoid when the fit is ill-posed
double power_cell(double r0, double r1, double g0, double g1) {
    if (g0 == 0.0 && g1 == 0.0) return 0.0;
    if (g0 * g1 > 0.0) {
        const double p = local_power(r0, r1, g0, g1);
        if (p > -6.0 && p < 8.0 && std::fabs(p + 1.0) > 1e-9) {
            const double c = g0 / std::pow(r0, p);
            return c * (std::pow(r1, p + 1.0) - std::pow(r0, p + 1.0)) / (p + 1.0);
        }
    }
    return 0.5 * (r1 - r0) * (g0 + g1);
}

// two-term model g = (A + B r)/(2 sqrt(r)), i.e. c0 r^{-1/2} + c1 r^{1/2};
// exact on the sqrt-expansions behind the r^{-1/2} integrands here
double singular_pair_cell(double r0, double r1, double g0, double g1) {
    const double G0 = 2.0 * std::sqrt(r0) * g0;
    const double G1 = 2.0 * std::sqrt(r1) * g1;
    const double B = (G1 - G0) / (r1 - r0);
    const double A = G0 - B * r0;
    auto antider = [&](double r) {
        const double t = std::sqrt(r);
        return A * t + B * t * t * t / 3.0;
    };
    return antider(r1) - antider(r0);
}

// one head interval: singular branch when the local power points below zero
double head_interval(double r0, double r1, double g0, double g1) {
    if (g0 * g1 > 0.0 && local_power(r0, r1, g0, g1) < -0.05)
        return singular_pair_cell(r0, r1, g0, g1);
    return power_cell(r0, r1, g0, g1);
}

// the origin cell [0, r1]
double origin_cell(double r1, double r2, double g1, double g2) {
    if (g1 == 0.0) return 0.0;
    if (g1 * g2 > 0.0) {
        double p = local_power(r1, r2, g1, g2);
        if (p < -0.05) {
            const double G1 = 2.0 * std::sqrt(r1) * g1;
            const double G2 = 2.0 * std::sqrt(r2) * g2;
            const double B = (G2 - G1) / (r2 - r1);
            const double A = G1 - B * r1;
            const double t = std::sqrt(r1);
            return A * t + B * t * t * t / 3.0;
        }
        if (p < -0.999) p = -0.999;
        if (p > 6.0) p = 6.0;
        return g1 * r1 / (p + 1.0);
    }
    return 0.5 * r1 * g1;
}

}  // namespace

double quad_radial(std::span<const double> f, const RadialGrid& grid) {
    const int n = grid.n_points();
    if (static_cast<int>(f.size()) != n)
        throw std::invalid_argument("quad_radial: sample length does not match grid");

    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        const double r = grid.r(i);
        g[i] = f[i] * r * r;
    }
    const double h = grid.spacing();

    // Model-fit cells near the origin absorb integrable r^p singularities of
    // the integrand (f r^2 ~ r^{-1/2} is routine here); endpoint-corrected
    // trapezoid after.
    const int head_cells = n >= 24 ? 16 : std::max(1, n / 4);
    double head = origin_cell(grid.r(0), grid.r(1), g[0], g[1]);
    for (int i = 0; i < head_cells; ++i)
        head += head_interval(grid.r(i), grid.r(i + 1), g[i], g[i + 1]);
    double total = trapezoid(std::span<const double>(g).subspan(head_cells), h);
    if (n - head_cells >= 3) {
        // Euler-Maclaurin endpoint correction with one-sided slope estimates
        const int k = head_cells;
        const double dleft = (-3.0 * g[k] + 4.0 * g[k + 1] - g[k + 2]) / (2.0 * h);
        const double dright = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h);
        total -= h * h / 12.0 * (dright - dleft);
    }
    return 4.0 * std::numbers::pi * (total + head);
}

}  // namespace scottlab::core
