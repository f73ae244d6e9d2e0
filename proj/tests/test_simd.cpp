#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "scottlab/simd/kernels.hpp"

using namespace scottlab;

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

std::vector<std::complex<double>> random_cvec(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<std::complex<double>> v(n);
    for (auto& x : v) x = {u(rng), u(rng)};
    return v;
}

}  // namespace

TEST_CASE("active backend matches the scalar reference") {
    const auto& ref = kern::scalar_table();
    const auto& act = kern::active();
    INFO("backend: ", kern::backend_name());

    for (std::size_t n : {std::size_t(1), std::size_t(7), std::size_t(64), std::size_t(1037)}) {
        const auto a = random_vec(n, 10 + n), b = random_vec(n, 20 + n);

        // reductions agree to accumulation roundoff
        CHECK(act.dot(a.data(), b.data(), n) ==
              doctest::Approx(ref.dot(a.data(), b.data(), n)).epsilon(1e-13));
        CHECK(act.sum(a.data(), n) == doctest::Approx(ref.sum(a.data(), n)).epsilon(1e-13));
        CHECK(act.max_abs(a.data(), n) == ref.max_abs(a.data(), n));  // order-free, exact

        // elementwise kernels: exact where no FMA contraction enters,
        // 1-ulp tolerance where it does (axpy fuses on AVX2)
        std::vector<double> y1 = b, y2 = b;
        ref.axpy(1.37, a.data(), y1.data(), n);
        act.axpy(1.37, a.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(y1[i] - y2[i]) <= 1e-15 * (1.0 + std::fabs(y1[i])));

        std::vector<double> s1(n), s2(n);
        ref.scale_copy(s1.data(), a.data(), -0.71, n);
        act.scale_copy(s2.data(), a.data(), -0.71, n);
        CHECK(s1 == s2);

        ref.vmul(s1.data(), a.data(), b.data(), n);
        act.vmul(s2.data(), a.data(), b.data(), n);
        CHECK(s1 == s2);

        ref.mul_scale(s1.data(), a.data(), b.data(), 0.9, n);
        act.mul_scale(s2.data(), a.data(), b.data(), 0.9, n);
        CHECK(s1 == s2);

        std::vector<double> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = std::fabs(a[i]) * 3.0;
        ref.chandrasekhar_symbol(s1.data(), t.data(), 0.3, n);
        act.chandrasekhar_symbol(s2.data(), t.data(), 0.3, n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(s1[i] - s2[i]) <= 4e-15 * (1.0 + std::fabs(s1[i])));

        ref.sqrt_clamped(s1.data(), a.data(), n);
        act.sqrt_clamped(s2.data(), a.data(), n);
        CHECK(s1 == s2);
    }
}

TEST_CASE("complex kernels match the scalar reference") {
    const auto& ref = kern::scalar_table();
    const auto& act = kern::active();
    for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(33), std::size_t(500)}) {
        const auto x = random_cvec(n, 3 + n), y = random_cvec(n, 5 + n);
        const auto d1 = ref.zdotc(x.data(), y.data(), n);
        const auto d2 = act.zdotc(x.data(), y.data(), n);
        CHECK(std::abs(d1 - d2) <= 1e-13 * (1.0 + std::abs(d1)));
        CHECK(act.znorm2sq(x.data(), n) ==
              doctest::Approx(ref.znorm2sq(x.data(), n)).epsilon(1e-13));

        auto y1 = y, y2 = y;
        const std::complex<double> a{0.3, -1.1};
        ref.zaxpy(a, x.data(), y1.data(), n);
        act.zaxpy(a, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15);
    }
}

TEST_CASE("chandrasekhar symbol values") {
    // sqrt(t/a^2 + 1/a^4) - 1/a^2 at hand-checked points
    double out[2];
    const double t[2] = {0.0, 1.0};
    kern::chandrasekhar_symbol(out, t, 1.0, 2);
    CHECK(out[0] == doctest::Approx(0.0));
    CHECK(out[1] == doctest::Approx(std::sqrt(2.0) - 1.0));
}
