#pragma once

#include <vector>

namespace scottlab::tf {

/// Dimensionless screening function Phi(s) solving Phi'' = Phi^{3/2}/sqrt(s),
/// Phi(0) = 1, Phi(inf) = 0 (neutral atom).  Solved by shooting on the
/// initial slope; sampled on a mesh uniform in t = sqrt(s), where the system
/// u' = 2tw, w' = 2u^{3/2} (u = Phi, w = dPhi/ds) is regular at the origin.
struct UniversalTFSolution {
    std::vector<double> s_grid;  // s_i = t_i^2, s_0 = 0
    std::vector<double> phi;     // Phi(s_i)
    std::vector<double> dphi;    // dPhi/ds at s_i
    double initial_slope = 0.0;  // Phi'(0)
    double slope_bracket = 0.0;  // final bisection bracket width

    // fitted tail Phi ~ amplitude * s^{-exponent} beyond s_max()
    double far_field_exponent = 0.0;
    double far_field_amplitude = 0.0;

    double s_max() const { return s_grid.back(); }

    /// Phi at arbitrary s >= 0 (cubic Hermite inside the mesh, fitted power
    /// tail beyond).
    double phi_at(double s) const;
    double dphi_at(double s) const;

    /// Max finite-difference residual of the integrated system over interior
    /// nodes; scales with the storage step squared.
    double ode_residual() const;
};

/// Shooting/bisection solve.  `tolerance` in (0, 1e-3] bounds the slope
/// bracket (the bisection itself runs to long-double exhaustion).  Throws
/// with a trace if no collapse/divergence bracket exists in [-2, -1].
UniversalTFSolution solve_tf_ode(double tolerance, double s_max = 400.0);

}  // namespace scottlab::tf
