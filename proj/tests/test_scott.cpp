#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "scottlab/scott/estimate.hpp"
#include "scottlab/scott/ir.hpp"
#include "scottlab/scott/table.hpp"

using namespace scottlab;

namespace {
constexpr double c_sc = 4.0 * std::sqrt(2.0) / (15.0 * std::numbers::pi * std::numbers::pi);
}

TEST_CASE("i_r: degenerate, sharp, and smooth profiles") {
    const core::RadialGrid grid(1.0 / 64.0, 64 * 40);

    const auto zero = core::CutoffProfile::by_id("zero");
    CHECK(scott::i_r(zero, 8.0, grid) == 0.0);

    // sharp indicator: I_R = -c 8 pi sqrt(R); the sampled edge carries an
    // O(spacing) quadrature error that halves under refinement
    const auto sharp = core::CutoffProfile::by_id("sharp");
    const core::RadialGrid fine(1.0 / 128.0, 128 * 40);
    for (double R : {4.0, 9.0, 16.0}) {
        const double expect = -c_sc * 8.0 * std::numbers::pi * std::sqrt(R);
        const double coarse_v = scott::i_r(sharp, R, grid);
        CHECK(coarse_v == doctest::Approx(expect).epsilon(2e-3));
        CHECK(std::fabs(scott::i_r(sharp, R, fine) - expect) <
              std::fabs(coarse_v - expect));
    }

    // smooth profile lands between the sharp values at R and 2R
    const core::CutoffProfile smooth;
    for (double R : {4.0, 8.0, 16.0}) {
        const double v = scott::i_r(smooth, R, grid);
        CHECK(v < 0.0);
        const double lo = -c_sc * 8.0 * std::numbers::pi * std::sqrt(2.0 * R);
        const double hi = -c_sc * 8.0 * std::numbers::pi * std::sqrt(R);
        CHECK(v >= lo);
        CHECK(v <= hi);
    }

    CHECK_THROWS_AS(scott::i_r(smooth, 25.0, grid), std::invalid_argument);  // support 50 > 40
}

TEST_CASE("i_r: sqrt(R) growth") {
    const core::RadialGrid grid(1.0 / 64.0, 64 * 130);
    const core::CutoffProfile prof;
    double prev = scott::i_r(prof, 16.0, grid);
    for (double R : {32.0, 64.0}) {
        const double cur = scott::i_r(prof, R, grid);
        CHECK(cur / prev == doctest::Approx(std::numbers::sqrt2).epsilon(0.05));
        prev = cur;
    }
}

TEST_CASE("scott_estimate: validation") {
    const core::CutoffProfile prof;
    CHECK_THROWS_AS(scott::scott_estimate(-0.1, 8.0, 0.0, prof), std::invalid_argument);
    CHECK_THROWS_AS(scott::scott_estimate(0.8, 8.0, 0.0, prof), std::invalid_argument);
    CHECK_THROWS_AS(scott::scott_estimate(0.0, 2.0, 0.0, prof), std::invalid_argument);
    CHECK_THROWS_AS(scott::scott_estimate(0.0, 8.0, -1.0, prof), std::invalid_argument);
    scott::ScottConfig coarse;
    coarse.spacing = 0.2;  // too coarse for alpha = 0.4
    CHECK_THROWS_WITH_AS(scott::scott_estimate(0.4, 8.0, 0.0, prof, coarse),
                         doctest::Contains("need <="), std::invalid_argument);
}

TEST_CASE("scott_estimate: single nonrelativistic cell") {
    const core::CutoffProfile prof;
    const auto est = scott::scott_estimate(0.0, 8.0, 0.0, prof);
    CHECK(est.trace_value < 0.0);
    CHECK(est.i_r_value < 0.0);
    CHECK(est.s2_estimate == doctest::Approx(0.5 * (est.trace_value - est.i_r_value)));
    CHECK(est.s2_estimate > -1.0);
    CHECK(est.s2_estimate < 1.0);
    CHECK(est.profile_id == "cos-smoothstep5");
}

TEST_CASE("scott_estimate: the well lowers the trace and fades with R") {
    const core::CutoffProfile prof;
    const auto d0 = scott::scott_estimate(0.0, 8.0, 0.0, prof);
    const auto d1 = scott::scott_estimate(0.0, 8.0, 1.0, prof);
    CHECK(d1.trace_value <= d0.trace_value + 1e-12);  // adding -D R^{-2} chi only lowers

    const auto d0b = scott::scott_estimate(0.0, 32.0, 0.0, prof);
    const auto d1b = scott::scott_estimate(0.0, 32.0, 1.0, prof);
    // the well influence shrinks as R grows
    CHECK(std::fabs(d1b.trace_value - d0b.trace_value) <
          std::fabs(d1.trace_value - d0.trace_value));
}

TEST_CASE("scott_ladder: history, error bar, R-Cauchy trend") {
    const core::CutoffProfile prof;
    const std::vector<double> rs = {8.0, 16.0, 32.0, 64.0};
    const auto lad = scott::scott_ladder(0.0, rs, 0.0, prof);
    REQUIRE(lad.history.size() == 4);
    CHECK(lad.err_bar ==
          doctest::Approx(std::fabs(lad.history[3].s2 - lad.history[2].s2)));
    // converging run: successive differences not growing
    const double d1 = std::fabs(lad.history[2].s2 - lad.history[1].s2);
    const double d2 = std::fabs(lad.history[3].s2 - lad.history[2].s2);
    CHECK(d2 <= d1 * 1.05);
    // the nonrelativistic limit: s2 -> 1/4
    CHECK(lad.s2_extrapolated == doctest::Approx(0.25).epsilon(0.1));
    CHECK_THROWS_AS(scott::scott_ladder(0.0, std::vector<double>{8.0, 8.0}, 0.0, prof),
                    std::invalid_argument);
}

TEST_CASE("scott_table: validation and profile checks") {
    const core::CutoffProfile prof;
    const std::vector<double> rs = {8.0, 16.0};
    CHECK_THROWS_AS(scott::scott_table(std::vector<double>{}, rs, prof, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(scott::scott_table(std::vector<double>{0.4, 0.2}, rs, prof, 0.0),
                    std::invalid_argument);

    const std::vector<double> alphas = {0.0};
    const auto table = scott::scott_table(alphas, rs, prof, 0.0);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.monotone_ok);
    REQUIRE(table.profile_checks.size() == 1);
    CHECK(table.profile_checks[0].alternate_id == "cos-smoothstep7");
    CHECK(table.max_profile_difference <= 0.02);
}
