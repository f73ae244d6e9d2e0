#include "scottlab/core/eig.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#define LAPACK_COMPLEX_CPP
#include <cblas.h>
#include <lapacke.h>

namespace scottlab::core {

namespace {

[[noreturn]] void lapack_fail(const char* routine, int info) {
    throw std::runtime_error(std::string(routine) + " failed, info=" + std::to_string(info));
}

void require_symmetric(const SymmetricMatrix& m) {
    const double asym = m.max_asymmetry();
    const double scale = m.max_abs();
    if (asym > 1e-12 * scale) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "eig_sym: input not symmetric (max asymmetry %.3e, max entry %.3e)", asym,
                      scale);
        throw std::invalid_argument(buf);
    }
}

}  // namespace

EigResult eig_sym(const SymmetricMatrix& m) {
    require_symmetric(m);
    const int n = m.order();
    EigResult r;
    r.values.resize(n);
    r.vectors = m.storage();
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, r.vectors.data(), n,
                                    r.values.data());
    if (info != 0) lapack_fail("dsyevd", info);
    return r;
}

std::vector<double> eigvals_sym(const SymmetricMatrix& m) {
    require_symmetric(m);
    const int n = m.order();
    Matrix a = m.storage();
    std::vector<double> w(n);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
    if (info != 0) lapack_fail("dsyevd", info);
    return w;
}

namespace {

EigResult tridiag_impl(std::span<const double> diag, std::span<const double> off, char jobz,
                       char range, int il, int iu) {
    const int n = static_cast<int>(diag.size());
    if (static_cast<int>(off.size()) != n - 1)
        throw std::invalid_argument("tridiag: off-diagonal length must be n-1");
    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(off.begin(), off.end());
    e.resize(n, 0.0);
    EigResult r;
    r.values.resize(n);
    int m = 0;
    std::vector<lapack_int> isuppz(2 * std::max(1, n));
    const int cols = (range == 'I') ? (iu - il + 1) : n;
    if (jobz == 'V') r.vectors = Matrix(n, cols);
    const int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, jobz, range, n, d.data(), e.data(), 0.0, 0.0,
                                    il, iu, 0.0, &m, r.values.data(),
                                    jobz == 'V' ? r.vectors.data() : nullptr, n, isuppz.data());
    if (info != 0) lapack_fail("dstevr", info);
    r.values.resize(m);
    return r;
}

}  // namespace

EigResult eig_tridiag(std::span<const double> diag, std::span<const double> off) {
    return tridiag_impl(diag, off, 'V', 'A', 0, 0);
}

std::vector<double> eigvals_tridiag(std::span<const double> diag, std::span<const double> off) {
    return tridiag_impl(diag, off, 'N', 'A', 0, 0).values;
}

std::vector<double> lowest_eigvals_tridiag(std::span<const double> diag,
                                           std::span<const double> off, int k) {
    return tridiag_impl(diag, off, 'N', 'I', 1, k).values;
}

std::vector<double> eig_herm_inplace(CplxMatrix& a) {
    const int n = a.rows();
    std::vector<double> w(n);
    const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                    reinterpret_cast<lapack_complex_double*>(a.data()), n,
                                    w.data());
    if (info != 0) lapack_fail("zheevd", info);
    return w;
}

std::vector<double> eigvals_herm(CplxMatrix a) {
    const int n = a.rows();
    std::vector<double> w(n);
    const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                    reinterpret_cast<lapack_complex_double*>(a.data()), n,
                                    w.data());
    if (info != 0) lapack_fail("zheevd", info);
    return w;
}

double negative_part_sum(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double v : eigenvalues)
        if (v < 0.0) s += v;
    return s;
}

Matrix gemm(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    cblas_dgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, a.rows(), b.cols(), a.cols(), 1.0,
                a.data(), a.rows(), b.data(), b.rows(), 0.0, c.data(), c.rows());
    return c;
}

Matrix gemm_abt(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.rows());
    cblas_dgemm(CblasColMajor, CblasNoTrans, CblasTrans, a.rows(), b.rows(), a.cols(), 1.0,
                a.data(), a.rows(), b.data(), b.rows(), 0.0, c.data(), c.rows());
    return c;
}

CplxMatrix gemm_abh(const CplxMatrix& a, const CplxMatrix& b) {
    CplxMatrix c(a.rows(), b.rows());
    const std::complex<double> one(1.0, 0.0), zero(0.0, 0.0);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasConjTrans, a.rows(), b.rows(), a.cols(), &one,
                a.data(), a.rows(), b.data(), b.rows(), &zero, c.data(), c.rows());
    return c;
}

}  // namespace scottlab::core
