#include "scottlab/pauli/lanczos.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "scottlab/simd/kernels.hpp"

namespace scottlab::pauli {

namespace {
using cplx = std::complex<double>;

// smallest Ritz value and its tridiagonal eigenvector
double ritz_min(const std::vector<double>& a, const std::vector<double>& b,
                std::vector<double>& vec) {
    const int m = static_cast<int>(a.size());
    std::vector<double> d = a, e = b;
    e.resize(m, 0.0);
    std::vector<double> w(m);
    std::vector<double> z(static_cast<std::size_t>(m) * m);
    const int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', m, d.data(), e.data(), z.data(), m);
    if (info != 0) throw std::runtime_error("lanczos: dstev failed");
    vec.assign(z.begin(), z.begin() + m);
    return d[0];
}

}  // namespace

LanczosResult lanczos_min_eig(const SpinorOperator& op, int max_iter, unsigned seed, double tol) {
    const int n = op.dim();
    max_iter = std::min(max_iter, n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<std::vector<cplx>> basis;
    std::vector<cplx> v(n), w(n);
    for (auto& x : v) x = cplx(gauss(rng), gauss(rng));
    {
        const double nrm = std::sqrt(kern::znorm2sq(v.data(), n));
        for (auto& x : v) x /= nrm;
    }

    std::vector<double> alpha, beta;
    LanczosResult res;
    double theta_prev = 0.0;
    std::vector<double> ritz_vec;

    for (int it = 0; it < max_iter; ++it) {
        basis.push_back(v);
        op.apply(v.data(), w.data());
        if (!beta.empty())
            kern::zaxpy(cplx(-beta.back(), 0.0), basis[basis.size() - 2].data(), w.data(), n);
        const double a = kern::zdotc(v.data(), w.data(), n).real();
        alpha.push_back(a);
        kern::zaxpy(cplx(-a, 0.0), v.data(), w.data(), n);
        const double b = std::sqrt(kern::znorm2sq(w.data(), n));
        res.iterations = it + 1;

        const bool check = (it + 1) % 10 == 0 || b < 1e-13 || it + 1 == max_iter;
        if (check) {
            const double theta = ritz_min(alpha, beta, ritz_vec);
            if (it > 10 && std::fabs(theta - theta_prev) < tol * std::max(1.0, std::fabs(theta))) {
                theta_prev = theta;
                break;
            }
            theta_prev = theta;
        }
        if (b < 1e-13) break;
        beta.push_back(b);
        for (int i = 0; i < n; ++i) v[i] = w[i] / b;
    }

    // assemble the Ritz vector and validate by the explicit residual
    res.value = ritz_min(alpha, beta, ritz_vec);
    std::vector<cplx> y(n, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        kern::zaxpy(cplx(ritz_vec[j], 0.0), basis[j].data(), y.data(), n);
    const double ynrm = std::sqrt(kern::znorm2sq(y.data(), n));
    for (auto& x : y) x /= ynrm;
    op.apply(y.data(), w.data());
    kern::zaxpy(cplx(-res.value, 0.0), y.data(), w.data(), n);
    res.residual = std::sqrt(kern::znorm2sq(w.data(), n));
    res.converged = res.residual < 1e-6;
    return res;
}

}  // namespace scottlab::pauli
