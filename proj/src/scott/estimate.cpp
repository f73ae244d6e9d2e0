#include "scottlab/scott/estimate.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "scottlab/scott/ir.hpp"
#include "scottlab/spectral/trace.hpp"

namespace scottlab::scott {

namespace {

double auto_spacing(double alpha) { return alpha > 0.0 ? alpha / 8.0 : 1.0 / 64.0; }

}  // namespace

ScottEstimate scott_estimate(double alpha, double R, double D_coef,
                             const core::CutoffProfile& profile, const ScottConfig& cfg) {
    const double critical = 2.0 / std::numbers::pi;
    if (alpha < 0.0 || alpha > critical + 1e-12)
        throw std::invalid_argument("scott_estimate: alpha must lie in [0, 2/pi]");
    if (!(R >= 4.0)) throw std::invalid_argument("scott_estimate: R must be >= 4");
    if (D_coef < 0.0) throw std::invalid_argument("scott_estimate: D must be >= 0");

    double h = cfg.spacing > 0.0 ? cfg.spacing : auto_spacing(alpha);
    if (alpha > 0.0 && h > alpha / 8.0 + 1e-15) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "scott_estimate: spacing %.4g does not resolve the core scale; need <= %.4g",
                      h, alpha / 8.0);
        throw std::invalid_argument(buf);
    }

    const double support = profile.support_scale() * R;
    // the sandwiched tridiagonal problem is exact on the support, the matrix
    // function needs room beyond it
    const double box = alpha > 0.0 ? cfg.box_factor * R : support + 4.0 * h;
    const core::RadialGrid grid = core::grid_for_extent(h, box);

    const spectral::KineticModel model = alpha > 0.0
                                             ? spectral::KineticModel::chandrasekhar(alpha)
                                             : spectral::KineticModel::nonrelativistic();
    const double well = D_coef / (R * R);
    const std::vector<double> pot = grid.sample(
        [&](double r) { return -1.0 / r - (r <= support ? well : 0.0); });
    const std::vector<double> phi = profile.sample(grid, R);

    const spectral::LocalizedTraceResult tr =
        spectral::sum_channels(model, pot, phi, grid, cfg.ell_truncation_tol, cfg.ell_limit);

    ScottEstimate est;
    est.alpha = alpha;
    est.R = R;
    est.D_coef = D_coef;
    est.lambda_field = cfg.lambda_field;
    est.trace_value = tr.total;
    est.i_r_value = i_r(profile, R, grid);
    est.s2_estimate = 0.5 * (est.trace_value - est.i_r_value);
    est.s2_extrapolated = est.s2_estimate;
    est.ell_max_used = tr.ell_max_used;
    est.tail_estimate = tr.tail_estimate;
    est.grid_spacing = grid.spacing();
    est.grid_points = grid.n_points();
    est.profile_id = std::string(profile.id());
    est.history.push_back({R, est.trace_value, est.i_r_value, est.s2_estimate, est.ell_max_used,
                           est.tail_estimate});
    return est;
}

ScottEstimate scott_ladder(double alpha, std::span<const double> R_schedule, double D_coef,
                           const core::CutoffProfile& profile, const ScottConfig& cfg) {
    if (R_schedule.empty()) throw std::invalid_argument("scott_ladder: empty R schedule");
    for (std::size_t i = 1; i < R_schedule.size(); ++i)
        if (R_schedule[i] <= R_schedule[i - 1])
            throw std::invalid_argument("scott_ladder: R schedule must be ascending");

    ScottEstimate out;
    std::vector<ScottEstimate::Step> steps;
    for (double R : R_schedule) {
        out = scott_estimate(alpha, R, D_coef, profile, cfg);
        steps.push_back(out.history.front());
    }
    out.history = steps;
    const std::size_t n = steps.size();
    out.err_bar = n >= 2 ? std::fabs(steps[n - 1].s2 - steps[n - 2].s2) : 0.0;

    // fit in x = 1/sqrt(R): linear over the last 3 points, quadratic over the
    // last 4 when the ladder is deep enough (the boundary layer carries a
    // visible 1/R correction)
    if (n >= 2) {
        const std::size_t k = std::min<std::size_t>(3, n);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = n - k; i < n; ++i) {
            const double x = 1.0 / std::sqrt(steps[i].R);
            sx += x; sy += steps[i].s2; sxx += x * x; sxy += x * steps[i].s2;
        }
        const double denom = k * sxx - sx * sx;
        out.s2_extrapolated = (sy * sxx - sx * sxy) / denom;
    }
    if (n >= 4) {
        // least squares for s2 = a + b x + c x^2 over the last 4 points
        double m[3][3] = {};
        double rhs[3] = {};
        for (std::size_t i = n - 4; i < n; ++i) {
            const double x = 1.0 / std::sqrt(steps[i].R);
            const double phi[3] = {1.0, x, x * x};
            for (int a = 0; a < 3; ++a) {
                rhs[a] += phi[a] * steps[i].s2;
                for (int b = 0; b < 3; ++b) m[a][b] += phi[a] * phi[b];
            }
        }
        // 3x3 Gaussian elimination
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int r = col + 1; r < 3; ++r)
                if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
            std::swap(m[col], m[piv]);
            std::swap(rhs[col], rhs[piv]);
            for (int r = col + 1; r < 3; ++r) {
                const double f = m[r][col] / m[col][col];
                for (int cc = col; cc < 3; ++cc) m[r][cc] -= f * m[col][cc];
                rhs[r] -= f * rhs[col];
            }
        }
        double sol[3];
        for (int r = 2; r >= 0; --r) {
            double acc = rhs[r];
            for (int cc = r + 1; cc < 3; ++cc) acc -= m[r][cc] * sol[cc];
            sol[r] = acc / m[r][r];
        }
        out.s2_extrapolated = sol[0];
    }
    return out;
}

}  // namespace scottlab::scott
