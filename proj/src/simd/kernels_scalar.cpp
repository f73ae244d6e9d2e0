#include "scottlab/simd/kernels.hpp"

#include <cmath>

namespace scottlab::kern {
namespace {

double s_dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double s_sum(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double s_max_abs(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

void s_axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void s_scale(double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void s_scale_copy(double* dst, const double* src, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a * src[i];
}

void s_vmul(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void s_mul_scale(double* dst, const double* src, const double* v, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = s * (v[i] * src[i]);
}

void s_chandrasekhar_symbol(double* dst, const double* t, double alpha, std::size_t n) {
    const double ia2 = 1.0 / (alpha * alpha);
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::sqrt(ia2 * t[i] + ia2 * ia2) - ia2;
}

void s_sqrt_clamped(double* dst, const double* t, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::sqrt(t[i] > 0.0 ? t[i] : 0.0);
}

void s_zaxpy(std::complex<double> a, const std::complex<double>* x, std::complex<double>* y,
             std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

std::complex<double> s_zdotc(const std::complex<double>* x, const std::complex<double>* y,
                             std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double s_znorm2sq(const std::complex<double>* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
    return acc;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t = {
        s_dot,  s_sum,        s_max_abs,             s_axpy,         s_scale,
        s_scale_copy, s_vmul, s_mul_scale, s_chandrasekhar_symbol, s_sqrt_clamped,
        s_zaxpy, s_zdotc, s_znorm2sq,
    };
    return t;
}

}  // namespace scottlab::kern
