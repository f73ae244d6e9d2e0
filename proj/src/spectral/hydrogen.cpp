#include "scottlab/spectral/hydrogen.hpp"

#include <cmath>
#include <stdexcept>

#include "scottlab/core/eig.hpp"
#include "scottlab/core/quadrature.hpp"
#include "scottlab/spectral/channel.hpp"

namespace scottlab::spectral {

HydrogenCheck hydrogen_check(const std::vector<core::RadialGrid>& ladder) {
    if (ladder.size() < 2) throw std::invalid_argument("hydrogen_check: need at least 2 grids");

    HydrogenCheck out;
    for (int ell = 0; ell <= 2; ++ell) {
        // ladder[g][k] = k-th lowest eigenvalue on grid g
        std::vector<std::vector<double>> levels;
        for (const auto& grid : ladder) {
            const auto pot = grid.sample([](double r) { return -1.0 / r; });
            const ChannelOperator op = build_channel(grid, ell, pot);
            std::vector<double> d(op.kinetic_diag.size());
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] = 0.5 * op.kinetic_diag[i] + op.potential[i];
            std::vector<double> e(op.kinetic_off.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = 0.5 * op.kinetic_off[i];
            levels.push_back(core::lowest_eigvals_tridiag(d, e, 3));
        }
        for (int k = 0; k < 3; ++k) {
            HydrogenCheck::Entry entry;
            entry.ell = ell;
            entry.n_quantum = ell + 1 + k;
            entry.target = -0.5 / (entry.n_quantum * entry.n_quantum);
            for (const auto& lv : levels) entry.ladder.push_back(lv[k]);
            const std::size_t g = entry.ladder.size();
            entry.extrapolated = core::richardson(entry.ladder[g - 2], entry.ladder[g - 1], 2);
            entry.error = std::fabs(entry.extrapolated - entry.target);
            entry.monotone = true;
            for (std::size_t i = 1; i < g; ++i)
                if (std::fabs(entry.ladder[i] - entry.target) >
                    std::fabs(entry.ladder[i - 1] - entry.target))
                    entry.monotone = false;
            out.worst_error = std::max(out.worst_error, entry.error);
            out.all_monotone = out.all_monotone && entry.monotone;
            out.entries.push_back(std::move(entry));
        }
    }
    return out;
}

}  // namespace scottlab::spectral
