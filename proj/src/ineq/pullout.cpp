#include "scottlab/ineq/pullout.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "scottlab/core/eig.hpp"
#include "scottlab/core/matrix_function.hpp"

namespace scottlab::ineq {

namespace {

using core::Matrix;
using core::SymmetricMatrix;

SymmetricMatrix random_psd(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix x(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) x(i, j) = gauss(rng);
    SymmetricMatrix g(core::gemm_abt(x, x));
    g.symmetrize();
    return g;
}

double clamped_pow(double t, double a) { return std::pow(t > 0.0 ? t : 0.0, a); }

SymmetricMatrix add(const SymmetricMatrix& x, const SymmetricMatrix& y, double sign) {
    const int n = x.order();
    SymmetricMatrix r(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) r(i, j) = x(i, j) + sign * y(i, j);
    return r;
}

}  // namespace

InequalityReport pullout_test(int n, int parts, double a, int trials, unsigned seed) {
    if (n < 1 || n > 8) throw std::invalid_argument("pullout_test: order must be in [1, 8]");
    if (parts < 1 || parts > 5) throw std::invalid_argument("pullout_test: parts must be in [1, 5]");
    if (!(a > 0.0) || a > 1.0) throw std::invalid_argument("pullout_test: exponent must be in (0, 1]");
    if (trials < 1) throw std::invalid_argument("pullout_test: need at least one trial");

    std::mt19937_64 rng(seed);
    InequalityReport rep;
    rep.family = "pullout";
    rep.worst_margin = 1e300;
    int retries = 0;

    for (int trial = 0; trial < trials; ++trial) {
        // resolution of identity from random PSD pieces
        std::vector<SymmetricMatrix> s_parts;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) throw std::runtime_error("pullout_test: resolution construction failed");
            std::vector<SymmetricMatrix> g;
            SymmetricMatrix q(n);
            for (int k = 0; k < parts; ++k) {
                g.push_back(random_psd(n, rng));
                q = add(q, g.back(), +1.0);
            }
            const auto qe = core::eig_sym(q);
            if (qe.values.front() < 1e-10 * qe.values.back()) {
                ++retries;
                continue;
            }
            const SymmetricMatrix q_inv_sqrt =
                core::matrix_function(qe, [](double t) { return 1.0 / std::sqrt(t); });
            s_parts.clear();
            SymmetricMatrix check(n);
            for (int k = 0; k < parts; ++k) {
                Matrix tmp = core::gemm(q_inv_sqrt.storage(), g[k].storage());
                SymmetricMatrix m(core::gemm(tmp, q_inv_sqrt.storage()));
                m.symmetrize();
                s_parts.push_back(core::matrix_function(m, [](double t) {
                    return std::sqrt(t > 0.0 ? t : 0.0);
                }));
                SymmetricMatrix s2(core::gemm(s_parts.back().storage(), s_parts.back().storage()));
                check = add(check, s2, +1.0);
            }
            double defect = 0.0;
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    defect = std::max(defect, std::fabs(check(i, j) - (i == j ? 1.0 : 0.0)));
            if (defect > 1e-12) {
                ++retries;
                continue;
            }
            break;
        }

        SymmetricMatrix inner(n), rhs(n);
        for (int k = 0; k < parts; ++k) {
            const SymmetricMatrix ak = random_psd(n, rng);
            Matrix sa = core::gemm(s_parts[k].storage(), ak.storage());
            SymmetricMatrix sas(core::gemm(sa, s_parts[k].storage()));
            sas.symmetrize();
            inner = add(inner, sas, +1.0);

            const SymmetricMatrix ak_pow =
                core::matrix_function(ak, [a](double t) { return clamped_pow(t, a); });
            Matrix sp = core::gemm(s_parts[k].storage(), ak_pow.storage());
            SymmetricMatrix sps(core::gemm(sp, s_parts[k].storage()));
            sps.symmetrize();
            rhs = add(rhs, sps, +1.0);
        }
        const SymmetricMatrix lhs =
            core::matrix_function(inner, [a](double t) { return clamped_pow(t, a); });

        const auto diff_vals = core::eigvals_sym(add(lhs, rhs, -1.0));
        const auto lhs_vals = core::eigvals_sym(lhs);
        const double norm = std::max(std::fabs(lhs_vals.front()), std::fabs(lhs_vals.back()));
        const double margin = diff_vals.front() / (norm > 0.0 ? norm : 1.0);
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (trial < 32 || margin < -1e-10)
            rep.cases.push_back({"trial " + std::to_string(trial), diff_vals.front(), norm,
                                 0.0, margin});
        ++rep.cases_run;
    }
    rep.empirical_constant = 0.0;  // operator inequality, no constant involved
    rep.metrics["resolution_retries"] = retries;
    return rep;
}

}  // namespace scottlab::ineq
