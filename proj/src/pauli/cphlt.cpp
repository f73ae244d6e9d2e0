#include "scottlab/pauli/cphlt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scottlab/core/eig.hpp"
#include "scottlab/pauli/spinor.hpp"
#include "scottlab/simd/kernels.hpp"

namespace scottlab::pauli {

namespace {
constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;
}  // namespace

std::vector<double> hardy_site_potential(const LatticeBox& box) {
    const int n = box.sites_per_side;
    const double a = box.spacing();
    const double c = a * (n / 2) - 0.5 * a;  // half-integer center, min distance a/2
    std::vector<double> v(box.n_sites());
    auto min_image = [&](double d) {
        d = std::fabs(d);
        return std::min(d, box.length - d);
    };
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const double dx = min_image(a * i - c);
                const double dy = min_image(a * j - c);
                const double dz = min_image(a * k - c);
                const double r = std::max(std::sqrt(dx * dx + dy * dy + dz * dz), 0.5 * a);
                v[box.index(i, j, k)] = 2.0 / (pi * r);
            }
    return v;
}

ineq::InequalityReport cphlt_check(const GaugeField& gauge,
                                   const std::vector<SitePotential>& battery,
                                   bool coulomb_center) {
    const int n_sites = gauge.box.n_sites();
    const double a3 = std::pow(gauge.box.spacing(), 3);

    // |sigma.p_A| by spectral calculus on the Pauli square
    SpinorOperator pauli = build_pauli(gauge, std::vector<double>(n_sites, 0.0));
    core::CplxMatrix h = pauli.dense();
    const int dim = h.rows();
    std::vector<double> lam = core::eig_herm_inplace(h);  // h now holds the eigenvectors
    const double min_eig = lam.front();
    int clamped = 0;
    std::vector<double> sq(dim);
    for (int i = 0; i < dim; ++i) {
        if (lam[i] < 0.0) ++clamped;
        sq[i] = std::sqrt(lam[i] > 0.0 ? lam[i] : 0.0);
    }
    core::CplxMatrix scaled(dim, dim);
    for (int j = 0; j < dim; ++j) {
        const cplx* src = h.data() + static_cast<std::size_t>(j) * dim;
        cplx* dst = scaled.col(j);
        for (int i = 0; i < dim; ++i) dst[i] = sq[j] * src[i];
    }
    core::CplxMatrix root = core::gemm_abh(scaled, h);
    scaled = core::CplxMatrix();
    h = core::CplxMatrix();

    const std::vector<double> hardy =
        coulomb_center ? hardy_site_potential(gauge.box) : std::vector<double>(n_sites, 0.0);

    ineq::InequalityReport rep;
    rep.family = "cphlt";
    rep.metrics["pauli_min_eig"] = min_eig;
    rep.metrics["clamped_modes"] = clamped;
    rep.metrics["field_energy"] = gauge.field_energy;
    rep.metrics["sites_per_side"] = gauge.box.sites_per_side;

    for (const auto& pot : battery) {
        if (static_cast<int>(pot.values.size()) != n_sites)
            throw std::invalid_argument("cphlt_check: potential length mismatch");
        core::CplxMatrix m = root;
        double v4 = 0.0;
        for (int s = 0; s < n_sites; ++s) {
            const double v = pot.values[s];
            if (v < 0.0) throw std::invalid_argument("cphlt_check: battery potential must be >= 0");
            v4 += v * v * v * v;
            const double drop = hardy[s] + v;
            m(2 * s, 2 * s) -= drop;
            m(2 * s + 1, 2 * s + 1) -= drop;
        }
        const double lhs = core::negative_part_sum(core::eigvals_herm(std::move(m)));
        const double rhs = gauge.field_energy + a3 * v4;
        ineq::InequalityReport::CaseRow row{pot.label, lhs, rhs, 0.0, 0.0};
        if (rhs > 0.0) {
            row.ratio = -lhs / rhs;
            rep.empirical_constant = std::max(rep.empirical_constant, row.ratio);
        } else {
            rep.metrics["hardy_residual"] = lhs;  // pure lattice Hardy case
        }
        rep.cases.push_back(std::move(row));
        ++rep.cases_run;
    }
    rep.worst_margin = 1e300;
    for (auto& c : rep.cases) {
        if (c.rhs > 0.0) {
            c.margin = rep.empirical_constant - c.ratio;
            rep.worst_margin = std::min(rep.worst_margin, c.margin);
        }
    }
    if (rep.worst_margin == 1e300) rep.worst_margin = 0.0;
    return rep;
}

}  // namespace scottlab::pauli
