#include "scottlab/spectral/trace.hpp"

#include <cblas.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "scottlab/core/eig.hpp"
#include "scottlab/core/matrix_function.hpp"
#include "scottlab/simd/kernels.hpp"

namespace scottlab::spectral {

core::SymmetricMatrix apply_kinetic_model(const ChannelOperator& op, const KineticModel& model) {
    if (model.kind == KineticModel::Kind::nonrelativistic) {
        core::SymmetricMatrix h = op.hamiltonian_nonrelativistic_dense();
        return h;
    }
    core::SymmetricMatrix h =
        core::matrix_function(op.kinetic_dense(), [&](double t) { return model.symbol(t); });
    const int n = op.grid.n_points();
    for (int i = 0; i < n; ++i) h(i, i) += op.potential[i];
    return h;
}

double localized_negative_trace(const core::SymmetricMatrix& h, std::span<const double> cutoff) {
    const int n = h.order();
    if (static_cast<int>(cutoff.size()) != n)
        throw std::invalid_argument("localized_negative_trace: cutoff length mismatch");
    core::SymmetricMatrix s(n);
    for (int j = 0; j < n; ++j)
        kern::mul_scale(s.storage().col(j), h.storage().col(j), cutoff.data(), cutoff[j], n);
    s.symmetrize();
    return core::negative_part_sum(core::eigvals_sym(s));
}

double localized_negative_trace_tridiag(std::span<const double> diag, std::span<const double> off,
                                        std::span<const double> cutoff) {
    const int n = static_cast<int>(diag.size());
    if (static_cast<int>(cutoff.size()) != n)
        throw std::invalid_argument("localized_negative_trace_tridiag: cutoff length mismatch");
    // rows/cols where the cutoff vanishes only contribute zero eigenvalues
    int m = n;
    while (m > 0 && cutoff[m - 1] == 0.0) --m;
    if (m == 0) return 0.0;
    std::vector<double> d(m), e(m > 1 ? m - 1 : 0);
    for (int i = 0; i < m; ++i) d[i] = cutoff[i] * cutoff[i] * diag[i];
    for (int i = 0; i + 1 < m; ++i) e[i] = cutoff[i] * cutoff[i + 1] * off[i];
    return core::negative_part_sum(core::eigvals_tridiag(d, e));
}

namespace {

struct ChannelEval {
    double trace;
    int negative_count;
};

// Trace of one sandwiched channel.  The cutoff vanishes beyond its support,
// so only the leading m x m block of f(K) + V is ever needed; the matrix
// function is still evaluated on the full box.
ChannelEval channel_trace(const ChannelOperator& op, const KineticModel& model,
                          std::span<const double> cutoff) {
    const int n = op.grid.n_points();
    int m = n;
    while (m > 0 && cutoff[m - 1] == 0.0) --m;
    if (m == 0) return {0.0, 0};

    std::vector<double> vals;
    if (model.kind == KineticModel::Kind::nonrelativistic) {
        std::vector<double> d(m), e(m > 1 ? m - 1 : 0);
        for (int i = 0; i < m; ++i)
            d[i] = cutoff[i] * cutoff[i] * (0.5 * op.kinetic_diag[i] + op.potential[i]);
        for (int i = 0; i + 1 < m; ++i)
            e[i] = cutoff[i] * cutoff[i + 1] * 0.5 * op.kinetic_off[i];
        vals = core::eigvals_tridiag(d, e);
    } else {
        const core::EigResult kin = core::eig_tridiag(op.kinetic_diag, op.kinetic_off);
        std::vector<double> w(n);
        model.symbol_batch(w.data(), kin.values.data(), n);
        // leading m x m block of V f(L) V^T
        core::Matrix scaled(m, n);
        for (int j = 0; j < n; ++j)
            kern::scale_copy(scaled.col(j), kin.vectors.col(j), w[j], m);
        core::Matrix block(m, m);
        cblas_dgemm(CblasColMajor, CblasNoTrans, CblasTrans, m, m, n, 1.0, scaled.data(), m,
                    kin.vectors.data(), n, 0.0, block.data(), m);
        for (int i = 0; i < m; ++i) block(i, i) += op.potential[i];
        core::SymmetricMatrix s(m);
        for (int j = 0; j < m; ++j)
            kern::mul_scale(s.storage().col(j), block.col(j), cutoff.data(), cutoff[j], m);
        s.symmetrize();
        vals = core::eigvals_sym(s);
    }
    int neg = 0;
    for (double v : vals)
        if (v < 0.0) ++neg;
    return {core::negative_part_sum(vals), neg};
}

}  // namespace

LocalizedTraceResult sum_channels(const KineticModel& model, std::span<const double> potential,
                                  std::span<const double> cutoff, const core::RadialGrid& grid,
                                  double ell_truncation_tol, int ell_limit) {
    const int n = grid.n_points();
    if (static_cast<int>(potential.size()) != n || static_cast<int>(cutoff.size()) != n)
        throw std::invalid_argument("sum_channels: sample length does not match grid");
    if (n > 16384) throw std::invalid_argument("sum_channels: channel dimension capped at 16384");

    LocalizedTraceResult res;
    res.grid_spacing = grid.spacing();
    res.grid_points = n;
    std::vector<double> pot(potential.begin(), potential.end());

    int consecutive_small = 0;
    double weighted_last = 0.0;
    for (int ell = 0; ell <= ell_limit; ++ell) {
        const ChannelOperator op = build_channel(grid, ell, pot);
        const ChannelEval ev = channel_trace(op, model, cutoff);
        res.per_ell.push_back({ell, ev.trace, ev.negative_count});
        const double weighted = 2.0 * (2.0 * ell + 1.0) * ev.trace;
        res.total += weighted;
        res.ell_max_used = ell;
        weighted_last = weighted;
        if (std::fabs(weighted) <= ell_truncation_tol * std::fabs(res.total))
            ++consecutive_small;
        else
            consecutive_small = 0;
        if (consecutive_small >= 2) break;
    }
    res.tail_estimate = 2.0 * weighted_last;
    if (consecutive_small < 2) {
        std::string msg = "sum_channels: no convergence by ell=" + std::to_string(ell_limit) +
                          "; per-channel trace:";
        for (const auto& c : res.per_ell)
            if (c.ell < 4 || c.ell > ell_limit - 4)
                msg += " (" + std::to_string(c.ell) + ", " + std::to_string(c.contribution) + ")";
        throw std::runtime_error(msg);
    }
    return res;
}

}  // namespace scottlab::spectral
