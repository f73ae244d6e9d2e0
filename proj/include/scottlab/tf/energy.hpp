#pragma once

#include <span>
#include <vector>

#include "scottlab/core/grid.hpp"

namespace scottlab::tf {

struct TFAtom;

/// phi_f(r_i) = 4 pi [ (1/r) int_0^r f s^2 ds + int_r^{r_n} f s ds ] + outer_tail.
/// `outer_tail` adds a constant for mass beyond the grid.
std::vector<double> hartree_potential(std::span<const double> f, const core::RadialGrid& grid,
                                      double outer_tail = 0.0);

/// D(f) = 1/2 int int f(x) f(y) / |x-y|, radial shell formula.
double coulomb_energy(std::span<const double> f, const core::RadialGrid& grid);

/// Thomas-Fermi functional at density rho with V = Z/r and two spin states:
/// (3/10)(3 pi^2)^{2/3} int rho^{5/3} - int (Z/r) rho + D(rho).
/// Rejects negative density samples.
double tf_energy(std::span<const double> rho, double Z, const core::RadialGrid& grid);

/// Semiclassical energy -(4 sqrt(2)/15 pi^2) int weight V_+^{5/2}; equals the
/// phase-space integral (2/(2 pi)^3) int int weight (p^2/2 - V)_- dx dp.
double sc_energy(std::span<const double> V, std::span<const double> weight,
                 const core::RadialGrid& grid);

/// Empirical counterparts of the pointwise potential bounds, measured on the
/// grid: sup |V - Z/r| Z^{-4/3}, sup r V / Z, sup r^4 V.
struct VtfBounds {
    double coulomb_defect_scaled = 0.0;
    double rv_over_z = 0.0;
    double r4v = 0.0;
};
VtfBounds vtf_bound_constants(const TFAtom& atom);

}  // namespace scottlab::tf
