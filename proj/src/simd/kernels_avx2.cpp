#include "scottlab/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

// AVX2/FMA variants.  Reductions use four-wide lane accumulators combined in
// a fixed order, so results are deterministic per backend (not bit-identical
// to the scalar path; the equivalence tests bound the difference).

namespace scottlab::kern {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double v_dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double v_sum(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i];
    return r;
}

double v_max_abs(const double* a, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(a + i)));
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d m2 = _mm_max_pd(lo, hi);
    double r = _mm_cvtsd_f64(_mm_max_sd(m2, _mm_unpackhi_pd(m2, m2)));
    for (; i < n; ++i) r = std::max(r, std::fabs(a[i]));
    return r;
}

void v_axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

void v_scale(double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

void v_scale_copy(double* dst, const double* src, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(av, _mm256_loadu_pd(src + i)));
    for (; i < n; ++i) dst[i] = a * src[i];
}

void v_vmul(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void v_mul_scale(double* dst, const double* src, const double* v, double s, std::size_t n) {
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(v + i), _mm256_loadu_pd(src + i));
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(sv, t));
    }
    for (; i < n; ++i) dst[i] = s * (v[i] * src[i]);
}

void v_chandrasekhar_symbol(double* dst, const double* t, double alpha, std::size_t n) {
    const double ia2 = 1.0 / (alpha * alpha);
    const __m256d c1 = _mm256_set1_pd(ia2);
    const __m256d c2 = _mm256_set1_pd(ia2 * ia2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d arg = _mm256_fmadd_pd(c1, _mm256_loadu_pd(t + i), c2);
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_sqrt_pd(arg), c1));
    }
    for (; i < n; ++i) dst[i] = std::sqrt(ia2 * t[i] + ia2 * ia2) - ia2;
}

void v_sqrt_clamped(double* dst, const double* t, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_sqrt_pd(_mm256_max_pd(zero, _mm256_loadu_pd(t + i))));
    for (; i < n; ++i) dst[i] = std::sqrt(t[i] > 0.0 ? t[i] : 0.0);
}

void v_zaxpy(std::complex<double> a, const std::complex<double>* x, std::complex<double>* y,
             std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_setr_pd(-a.imag(), a.imag(), -a.imag(), a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d xs = _mm256_permute_pd(xv, 0b0101);  // (im, re) pairs
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        const __m256d r = _mm256_fmadd_pd(ar, xv, _mm256_fmadd_pd(ai, xs, yv));
        _mm256_storeu_pd(yp + 2 * i, r);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

std::complex<double> v_zdotc(const std::complex<double>* x, const std::complex<double>* y,
                             std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d accp = _mm256_setzero_pd();  // xr*yr, xi*yi pairs
    __m256d accq = _mm256_setzero_pd();  // xr*yi, xi*yr pairs
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        const __m256d ys = _mm256_permute_pd(yv, 0b0101);
        accp = _mm256_fmadd_pd(xv, yv, accp);
        accq = _mm256_fmadd_pd(xv, ys, accq);
    }
    alignas(32) double p[4], q[4];
    _mm256_store_pd(p, accp);
    _mm256_store_pd(q, accq);
    double re = (p[0] + p[1]) + (p[2] + p[3]);
    double im = (q[0] - q[1]) + (q[2] - q[3]);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double v_znorm2sq(const std::complex<double>* x, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += std::norm(x[i]);
    return r;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t = {
        v_dot,  v_sum,        v_max_abs,             v_axpy,         v_scale,
        v_scale_copy, v_vmul, v_mul_scale, v_chandrasekhar_symbol, v_sqrt_clamped,
        v_zaxpy, v_zdotc, v_znorm2sq,
    };
    return t;
}

}  // namespace scottlab::kern

#endif  // x86_64
