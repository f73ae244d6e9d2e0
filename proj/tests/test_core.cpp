#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "scottlab/core/cutoff.hpp"
#include "scottlab/core/eig.hpp"
#include "scottlab/core/grid.hpp"
#include "scottlab/core/matrix_function.hpp"
#include "scottlab/core/quadrature.hpp"
#include "support/jacobi.hpp"

using namespace scottlab;
using core::Matrix;
using core::SymmetricMatrix;

namespace {

SymmetricMatrix random_symmetric(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    SymmetricMatrix m(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) {
            const double v = g(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

SymmetricMatrix random_psd(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix x(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) x(i, j) = g(rng);
    SymmetricMatrix m(core::gemm_abt(x, x));
    m.symmetrize();
    return m;
}

}  // namespace

TEST_CASE("eig_sym identity and diagonal cases") {
    SymmetricMatrix id(3);
    for (int i = 0; i < 3; ++i) id(i, i) = 1.0;
    const auto r = core::eig_sym(id);
    for (double v : r.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

    SymmetricMatrix d(3);
    d(0, 0) = -2.0;
    d(1, 1) = 0.0;
    d(2, 2) = 5.0;
    const auto rd = core::eig_sym(d);
    CHECK(rd.values[0] == doctest::Approx(-2.0));
    CHECK(rd.values[1] == doctest::Approx(0.0));
    CHECK(rd.values[2] == doctest::Approx(5.0));
}

TEST_CASE("eig_sym reconstruction, orthonormality, and the independent oracle") {
    const auto m = random_symmetric(8, 42);
    const auto r = core::eig_sym(m);
    REQUIRE(static_cast<int>(r.values.size()) == 8);
    for (int i = 1; i < 8; ++i) CHECK(r.values[i] >= r.values[i - 1]);

    // V diag(l) V^T rebuilds the input
    Matrix scaled(8, 8);
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) scaled(i, j) = r.vectors(i, j) * r.values[j];
    const Matrix rebuilt = core::gemm_abt(scaled, r.vectors);
    double norm = m.max_abs();
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) CHECK(std::fabs(rebuilt(i, j) - m(i, j)) <= 1e-9 * norm);

    // column orthonormality
    const Matrix gram = core::gemm_abt(r.vectors, r.vectors);
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i)
            CHECK(std::fabs(gram(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-10);

    // eigenvalue residual per pair
    for (int k = 0; k < 8; ++k) {
        double worst = 0.0;
        for (int i = 0; i < 8; ++i) {
            double acc = 0.0;
            for (int j = 0; j < 8; ++j) acc += m(i, j) * r.vectors(j, k);
            worst = std::max(worst, std::fabs(acc - r.values[k] * r.vectors(i, k)));
        }
        CHECK(worst <= 1e-9 * norm);
    }

    // cross-check against the Jacobi oracle
    const auto oracle = testsupport::jacobi_eigenvalues(m);
    for (int k = 0; k < 8; ++k) CHECK(r.values[k] == doctest::Approx(oracle[k]).epsilon(1e-11));
}

TEST_CASE("eig_sym rejects asymmetry with a diagnostic") {
    SymmetricMatrix m(4);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0 + 1e-6;
    CHECK_THROWS_WITH_AS(core::eig_sym(m), doctest::Contains("asymmetry"), std::invalid_argument);
}

TEST_CASE("matrix_function identity, square, and sqrt oracles") {
    const auto m = random_symmetric(12, 7);
    const auto same = core::matrix_function(m, [](double t) { return t; });
    for (int j = 0; j < 12; ++j)
        for (int i = 0; i < 12; ++i)
            CHECK(std::fabs(same(i, j) - m(i, j)) <= 1e-10 * m.max_abs());

    const auto sq = core::matrix_function(m, [](double t) { return t * t; });
    const Matrix direct = core::gemm(m.storage(), m.storage());
    for (int j = 0; j < 12; ++j)
        for (int i = 0; i < 12; ++i)
            CHECK(std::fabs(sq(i, j) - direct(i, j)) <= 1e-9 * (1.0 + std::fabs(direct(i, j))));

    const auto p = random_psd(10, 11);
    const auto root = core::matrix_function(p, [](double t) { return std::sqrt(t > 0 ? t : 0); });
    const Matrix rsq = core::gemm(root.storage(), root.storage());
    for (int j = 0; j < 10; ++j)
        for (int i = 0; i < 10; ++i)
            CHECK(std::fabs(rsq(i, j) - p(i, j)) <= 1e-8 * p.max_abs());

    // commutes with the argument
    const Matrix fm = core::gemm(sq.storage(), m.storage());
    const Matrix mf = core::gemm(m.storage(), sq.storage());
    for (int j = 0; j < 12; ++j)
        for (int i = 0; i < 12; ++i)
            CHECK(std::fabs(fm(i, j) - mf(i, j)) <= 1e-8 * m.max_abs() * sq.max_abs());
}

TEST_CASE("matrix_function rejects maps undefined on the spectrum") {
    SymmetricMatrix d(2);
    d(0, 0) = -4.0;
    d(1, 1) = 9.0;
    CHECK_THROWS_WITH_AS(core::matrix_function(d, [](double t) { return std::sqrt(t); }),
                         doctest::Contains("-4"), std::runtime_error);
}

TEST_CASE("chandrasekhar map on PSD matrices: positivity and alpha ordering") {
    auto chan = [](double alpha) {
        return [alpha](double t) {
            const double ia2 = 1.0 / (alpha * alpha);
            return std::sqrt(ia2 * t + ia2 * ia2) - ia2;
        };
    };
    const auto p = random_psd(14, 3);
    const auto f1 = core::matrix_function(p, chan(0.4));
    const auto vals1 = core::eigvals_sym(f1);
    CHECK(vals1.front() >= -1e-10 * std::fabs(vals1.back()));

    // alpha' > alpha gives f_{alpha'} <= f_alpha in quadratic form sense
    const auto f2 = core::matrix_function(p, chan(0.9));
    SymmetricMatrix diff(14);
    for (int j = 0; j < 14; ++j)
        for (int i = 0; i < 14; ++i) diff(i, j) = f1(i, j) - f2(i, j);
    CHECK(core::eigvals_sym(diff).front() >= -1e-10);
}

TEST_CASE("negative_part_sum") {
    CHECK(core::negative_part_sum(std::vector<double>{1, 2, 3}) == 0.0);
    CHECK(core::negative_part_sum(std::vector<double>{-1, -2, 3}) == -3.0);
    CHECK(core::negative_part_sum(std::vector<double>{-0.5, 0, 0.25}) == -0.5);
}

TEST_CASE("tridiagonal solver agrees with the dense path") {
    const int n = 60;
    std::vector<double> d(n), e(n - 1, -1.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (auto& x : d) x = u(rng);
    const auto tri = core::eigvals_tridiag(d, e);
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = e[i];
        m(i + 1, i) = e[i];
    }
    const auto dense = core::eigvals_sym(m);
    for (int i = 0; i < n; ++i) CHECK(tri[i] == doctest::Approx(dense[i]).epsilon(1e-12));
    const auto low = core::lowest_eigvals_tridiag(d, e, 3);
    for (int i = 0; i < 3; ++i) CHECK(low[i] == doctest::Approx(dense[i]).epsilon(1e-12));
}

TEST_CASE("quad_radial examples") {
    const core::RadialGrid g(0.02, 500);  // r_max 10
    std::vector<double> zero(g.n_points(), 0.0);
    CHECK(core::quad_radial(zero, g) == 0.0);

    // Gaussian closed form: 4 pi int e^{-r^2} r^2 dr = pi^{3/2}
    const core::RadialGrid g8(0.01, 900);
    const auto gauss = g8.sample([](double r) { return std::exp(-r * r); });
    const double ref = std::pow(std::numbers::pi, 1.5);
    CHECK(core::quad_radial(gauss, g8) == doctest::Approx(ref).epsilon(1e-6));

    // f = 1/r^2 integrates the constant shell weight
    const auto inv2 = g.sample([](double r) { return 1.0 / (r * r); });
    CHECK(core::quad_radial(inv2, g) ==
          doctest::Approx(4.0 * std::numbers::pi * g.r_last()).epsilon(1e-9));

    // r^{-1/2}-type singular integrand hits the closed form
    const auto singular = g.sample([](double r) { return std::pow(r, -2.5); });
    const double closed = 4.0 * std::numbers::pi * 2.0 * std::sqrt(g.r_last());
    CHECK(core::quad_radial(singular, g) == doctest::Approx(closed).epsilon(1e-6));

    CHECK_THROWS_AS(core::quad_radial(zero, g8), std::invalid_argument);
}

TEST_CASE("richardson step") {
    // second-order data: I(h) = 1 + h^2
    CHECK(core::richardson(1.0 + 0.04, 1.0 + 0.01, 2) == doctest::Approx(1.0));
}

TEST_CASE("cutoff profiles: plateau, support, partner identity") {
    for (const char* id : {"cos-smoothstep5", "cos-smoothstep7"}) {
        const auto prof = core::CutoffProfile::by_id(id);
        CHECK(prof.theta(0.3) == 1.0);
        CHECK(prof.theta(1.0) == 1.0);
        CHECK(prof.theta(2.0) == 0.0);
        CHECK(prof.theta(5.0) == 0.0);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double t = 3.0 * i / 9999.0;
            const double th = prof.theta(t);
            CHECK(th >= 0.0);
            CHECK(th <= 1.0);
            const double pr = prof.partner(t);
            worst = std::max(worst, std::fabs(th * th + pr * pr - 1.0));
        }
        CHECK(worst <= 1e-12);
    }
    const auto sharp = core::CutoffProfile::by_id("sharp");
    CHECK(sharp.theta(0.99) == 1.0);
    CHECK(sharp.theta(1.01) == 0.0);
    CHECK_THROWS_AS(core::CutoffProfile::by_id("nope"), std::invalid_argument);
}

TEST_CASE("radial grid validation") {
    CHECK_THROWS_AS(core::RadialGrid(0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(core::RadialGrid(0.1, 4), std::invalid_argument);
    const core::RadialGrid g(0.5, 10);
    CHECK(g.r(0) == doctest::Approx(0.5));
    CHECK(g.r_max() == doctest::Approx(5.5));
    const auto fine = core::refined(g);
    CHECK(fine.r_max() == doctest::Approx(g.r_max()));
    CHECK(fine.spacing() == doctest::Approx(0.25));
}
