#pragma once

#include <span>
#include <vector>

#include "scottlab/core/matrix.hpp"
#include "scottlab/spectral/channel.hpp"
#include "scottlab/spectral/kinetic_model.hpp"

namespace scottlab::spectral {

/// f(kinetic) + diag(potential), dense.  For the nonrelativistic model this
/// is exactly kinetic/2 + diag(potential) (no spectral calculus involved).
core::SymmetricMatrix apply_kinetic_model(const ChannelOperator& op, const KineticModel& model);

/// tr[Phi h Phi]_- with Phi = diag(cutoff): eigenvalues of the sandwiched
/// matrix, summed over the negative part.
double localized_negative_trace(const core::SymmetricMatrix& h, std::span<const double> cutoff);

/// Same for a tridiagonal h (diagonal sandwich preserves the bandwidth).
double localized_negative_trace_tridiag(std::span<const double> diag, std::span<const double> off,
                                        std::span<const double> cutoff);

struct LocalizedTraceResult {
    struct Channel {
        int ell;
        double contribution;  // raw channel trace, before the 2(2l+1) weight
        int negative_count;
    };
    std::vector<Channel> per_ell;
    double total = 0.0;          // sum of 2(2l+1) * contribution
    int ell_max_used = 0;
    double tail_estimate = 0.0;  // 2 * weighted last contribution, not added
    double grid_spacing = 0.0;
    int grid_points = 0;
};

/// Degeneracy-weighted sum over channels l = 0, 1, ... (spin factor 2,
/// degeneracy 2l+1), stopping once two consecutive weighted contributions
/// fall below ell_truncation_tol * |running total|.  Throws if no convergence
/// by ell_limit, listing the per-channel trace.
LocalizedTraceResult sum_channels(const KineticModel& model, std::span<const double> potential,
                                  std::span<const double> cutoff, const core::RadialGrid& grid,
                                  double ell_truncation_tol, int ell_limit = 200);

}  // namespace scottlab::spectral
