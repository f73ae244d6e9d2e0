#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Vectorized inner-loop kernels with a scalar reference implementation and an
// AVX2/FMA variant selected once at startup.  Every kernel has a fixed
// deterministic reduction order for a given backend, so reruns on the same
// machine are bit-identical.  The scalar backend is the reference; the
// equivalence tests in tests/test_simd.cpp pin the AVX2 variants to it.

namespace scottlab::kern {

enum class Backend { scalar, avx2 };

// Active backend.  Chosen from CPU features; SCOTTLAB_SIMD=scalar|avx2|auto
// overrides (falls back to scalar when the requested ISA is unavailable).
Backend backend();
std::string_view backend_name();

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double*, double, std::size_t);
    // dst[i] = a * src[i]
    void (*scale_copy)(double*, const double*, double, std::size_t);
    // dst[i] = a[i] * b[i]
    void (*vmul)(double*, const double*, const double*, std::size_t);
    // dst[i] = s * v[i] * src[i]   (diagonal sandwich column update)
    void (*mul_scale)(double*, const double*, const double*, double, std::size_t);
    // dst[i] = sqrt(t[i]/alpha^2 + 1/alpha^4) - 1/alpha^2
    void (*chandrasekhar_symbol)(double*, const double*, double, std::size_t);
    // dst[i] = sqrt(max(t[i], 0))
    void (*sqrt_clamped)(double*, const double*, std::size_t);

    // complex double, interleaved (re, im)
    void (*zaxpy)(std::complex<double>, const std::complex<double>*,
                  std::complex<double>*, std::size_t);
    std::complex<double> (*zdotc)(const std::complex<double>*,
                                  const std::complex<double>*, std::size_t);
    double (*znorm2sq)(const std::complex<double>*, std::size_t);
};

// Table of the active backend's kernels.
const KernelTable& active();

// Reference implementations, always available (used by the equivalence tests).
const KernelTable& scalar_table();

inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline double sum(const double* a, std::size_t n) { return active().sum(a, n); }
inline double max_abs(const double* a, std::size_t n) { return active().max_abs(a, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline void scale(double* x, double a, std::size_t n) { active().scale(x, a, n); }
inline void scale_copy(double* dst, const double* src, double a, std::size_t n) { active().scale_copy(dst, src, a, n); }
inline void vmul(double* dst, const double* a, const double* b, std::size_t n) { active().vmul(dst, a, b, n); }
inline void mul_scale(double* dst, const double* src, const double* v, double s, std::size_t n) { active().mul_scale(dst, src, v, s, n); }
inline void chandrasekhar_symbol(double* dst, const double* t, double alpha, std::size_t n) { active().chandrasekhar_symbol(dst, t, alpha, n); }
inline void sqrt_clamped(double* dst, const double* t, std::size_t n) { active().sqrt_clamped(dst, t, n); }
inline void zaxpy(std::complex<double> a, const std::complex<double>* x, std::complex<double>* y, std::size_t n) { active().zaxpy(a, x, y, n); }
inline std::complex<double> zdotc(const std::complex<double>* x, const std::complex<double>* y, std::size_t n) { return active().zdotc(x, y, n); }
inline double znorm2sq(const std::complex<double>* x, std::size_t n) { return active().znorm2sq(x, n); }

}  // namespace scottlab::kern
