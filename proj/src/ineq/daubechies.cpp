#include "scottlab/ineq/daubechies.hpp"

#include <cmath>
#include <stdexcept>

#include "scottlab/core/quadrature.hpp"
#include "scottlab/spectral/trace.hpp"

namespace scottlab::ineq {

InequalityReport daubechies_constant(double alpha, const std::vector<RadialWell>& battery,
                                     const WellTraceConfig& cfg) {
    if (!(alpha > 0.0)) throw std::invalid_argument("daubechies_constant: alpha must be positive");
    if (battery.empty()) throw std::invalid_argument("daubechies_constant: empty battery");

    const core::RadialGrid grid = core::grid_for_extent(cfg.spacing, cfg.box);
    const std::vector<double> ones(grid.n_points(), 1.0);
    const auto model = spectral::KineticModel::chandrasekhar(alpha);

    InequalityReport rep;
    rep.family = "daubechies";
    for (const auto& well : battery) {
        const auto u = grid.sample(well.U);
        for (double v : u)
            if (v < 0.0) throw std::invalid_argument("daubechies_constant: well must be >= 0");
        std::vector<double> pot(u.size()), g(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) pot[i] = -u[i];
        const double lhs =
            spectral::sum_channels(model, pot, ones, grid, cfg.ell_truncation_tol).total;
        for (std::size_t i = 0; i < u.size(); ++i) g[i] = std::pow(u[i], 2.5);
        const double i52 = core::quad_radial(g, grid);
        for (std::size_t i = 0; i < u.size(); ++i) g[i] = std::pow(u[i], 4.0);
        const double i4 = core::quad_radial(g, grid);
        const double rhs = i52 + alpha * alpha * alpha * i4;
        const double ratio = rhs > 0.0 ? -lhs / rhs : 0.0;
        rep.cases.push_back({well.label, lhs, rhs, ratio, 0.0});
        rep.empirical_constant = std::max(rep.empirical_constant, ratio);
        ++rep.cases_run;
    }
    rep.worst_margin = 1e300;
    for (auto& c : rep.cases) {
        c.margin = rep.empirical_constant - c.ratio;  // slack at the fitted C
        rep.worst_margin = std::min(rep.worst_margin, c.margin);
    }
    rep.metrics["alpha"] = alpha;
    rep.metrics["spacing"] = cfg.spacing;
    return rep;
}

RefinementDrift daubechies_stability(double alpha, const std::vector<RadialWell>& battery,
                                     const WellTraceConfig& cfg) {
    RefinementDrift out;
    out.coarse = daubechies_constant(alpha, battery, cfg);
    WellTraceConfig fine = cfg;
    fine.spacing = cfg.spacing / 2.0;
    out.fine = daubechies_constant(alpha, battery, fine);
    const double a = out.coarse.empirical_constant, b = out.fine.empirical_constant;
    out.drift = (a > 0.0 && b > 0.0) ? std::max(a / b, b / a) : 1.0;
    return out;
}

}  // namespace scottlab::ineq
