// Acceptance gate: every criterion below runs at its stated tolerance and
// prints one PASS/FAIL line.  Run all with no arguments or a single one with
// --criterion N (used by ctest to keep per-criterion timing visible).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "scottlab/core/cutoff.hpp"
#include "scottlab/core/eig.hpp"
#include "scottlab/core/quadrature.hpp"
#include "scottlab/ineq/daubechies.hpp"
#include "scottlab/ineq/ims.hpp"
#include "scottlab/ineq/mcdly.hpp"
#include "scottlab/ineq/pullout.hpp"
#include "scottlab/pauli/cphlt.hpp"
#include "scottlab/pauli/lanczos.hpp"
#include "scottlab/pauli/spinor.hpp"
#include "scottlab/scott/estimate.hpp"
#include "scottlab/scott/ir.hpp"
#include "scottlab/scott/table.hpp"
#include "scottlab/spectral/channel.hpp"
#include "scottlab/spectral/hardy.hpp"
#include "scottlab/spectral/hydrogen.hpp"
#include "scottlab/tf/atom.hpp"
#include "scottlab/tf/energy.hpp"
#include "scottlab/tf/universal.hpp"

using namespace scottlab;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr double critical = 2.0 / std::numbers::pi;

struct Check {
    int id;
    const char* label;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

char detail_buf[512];

std::string fmt(const char* pattern, auto... args) {
    std::snprintf(detail_buf, sizeof detail_buf, pattern, args...);
    return detail_buf;
}

const tf::UniversalTFSolution& universal() {
    static const tf::UniversalTFSolution u = tf::solve_tf_ode(1e-6);
    return u;
}

tf::TFAtom atom_for(double Z, double spacing_scale = 0.01) {
    const double s = std::pow(Z, -1.0 / 3.0);
    return tf::tf_atom(Z, core::grid_for_extent(spacing_scale * s, 40.0 * s), universal());
}

bool c1_slope(std::string& detail) {
    const auto t0 = clock_type::now();
    const auto u = tf::solve_tf_ode(1e-6);
    const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    const double err = std::fabs(u.initial_slope - (-1.588071));
    detail = fmt("slope %.7f, err %.2e, solve %.3fs", u.initial_slope, err, secs);
    return err <= 1e-4 && secs < 1.0;
}

bool c2_semiclassical(std::string& detail) {
    const auto atom = atom_for(1.0, 0.005);
    std::vector<double> ones(atom.grid.n_points(), 1.0);
    const double sc = tf::sc_energy(atom.v_tf, ones, atom.grid);
    const double rel = std::fabs(sc - (atom.e_tf + atom.d_self)) / std::fabs(atom.e_tf);
    detail = fmt("sc %.6f vs E+D %.6f, rel %.2e", sc, atom.e_tf + atom.d_self, rel);
    return rel <= 1e-3;
}

bool c3_scaling(std::string& detail) {
    const auto a1 = atom_for(1.0);
    const auto a10 = atom_for(10.0);
    const double expected = std::pow(10.0, 7.0 / 3.0);
    const double rel = std::fabs(a10.e_tf / a1.e_tf - expected) / expected;
    detail = fmt("ratio %.6f vs %.6f, rel %.2e", a10.e_tf / a1.e_tf, expected, rel);
    return rel <= 1e-3;
}

bool c4_euler_lagrange(std::string& detail) {
    double worst = 0.0;
    for (double z : {1.0, 8.0}) {
        const auto atom = atom_for(z);
        worst = std::max(worst, std::max(atom.el_residual, atom.hartree_residual));
    }
    detail = fmt("worst residual %.2e (pointwise relation and Poisson route)", worst);
    return worst <= 1e-3;
}

bool c5_hydrogen(std::string& detail) {
    std::vector<core::RadialGrid> ladder;
    for (double h : {0.04, 0.02, 0.01}) ladder.push_back(core::grid_for_extent(h, 100.0));
    const auto rep = spectral::hydrogen_check(ladder);
    detail = fmt("worst extrapolated error %.2e over 9 levels", rep.worst_error);
    return rep.worst_error <= 1e-4;
}

bool c6_hardy(std::string& detail) {
    std::vector<core::RadialGrid> crit_ladder, super_ladder;
    for (double h : {0.08, 0.04, 0.02, 0.0125})
        crit_ladder.push_back(core::grid_for_extent(h, 40.0));
    for (double h : {0.02, 0.01, 0.005}) super_ladder.push_back(core::grid_for_extent(h, 40.0));
    const auto crit_rep = spectral::hardy_report(critical, crit_ladder);
    const auto super_rep = spectral::hardy_report(0.70, super_ladder);
    bool ok = !crit_rep.divergence_signature && super_rep.divergence_signature;
    double floor = 0.0;
    for (double v : crit_rep.min_eigs) floor = std::min(floor, v);
    ok = ok && floor >= -0.01;
    detail = fmt("critical floor %.4f (>= -0.01), supercritical %.4f -> %.4f (signature %d)",
                 floor, super_rep.min_eigs.front(), super_rep.min_eigs.back(),
                 static_cast<int>(super_rep.divergence_signature));
    return ok;
}

bool c7_scott_nonrel(std::string& detail) {
    const core::CutoffProfile prof;
    const std::vector<double> rs = {8.0, 16.0, 32.0, 64.0};
    const auto lad = scott::scott_ladder(0.0, rs, 0.0, prof);
    const double err = std::fabs(lad.s2_extrapolated - 0.25);
    detail = fmt("s2 ladder %.4f %.4f %.4f %.4f -> extrapolated %.4f (err %.2e)",
                 lad.history[0].s2, lad.history[1].s2, lad.history[2].s2, lad.history[3].s2,
                 lad.s2_extrapolated, err);
    return err <= 0.025;
}

bool c8_scott_table(std::string& detail) {
    const core::CutoffProfile prof;
    const std::vector<double> alphas = {0.0, 0.2, 0.4, 0.6, critical};
    const std::vector<double> rs = {8.0, 16.0, 32.0};
    const auto table = scott::scott_table(alphas, rs, prof, 0.0);
    bool finite = true;
    std::string vals;
    for (const auto& row : table.rows) {
        finite = finite && std::isfinite(row.s2_estimate) && std::isfinite(row.s2_extrapolated);
        vals += fmt(" %.4f", row.s2_extrapolated);
    }
    detail = "s2(alpha) =" + vals +
             fmt("; monotone %d, profile drift %.3f", static_cast<int>(table.monotone_ok),
                 table.max_profile_difference);
    return finite && table.monotone_ok;
}

bool c9_ir(std::string& detail) {
    const core::CutoffProfile prof;
    const core::RadialGrid grid(1.0 / 64.0, 64 * 130);
    const double i16 = scott::i_r(prof, 16.0, grid);
    const double i32 = scott::i_r(prof, 32.0, grid);
    const double i64 = scott::i_r(prof, 64.0, grid);
    const bool neg = i16 < 0.0 && i32 < 0.0 && i64 < 0.0;
    const double r1 = i32 / i16, r2 = i64 / i32;
    const bool growth = std::fabs(r1 - std::numbers::sqrt2) <= 0.05 * std::numbers::sqrt2 &&
                        std::fabs(r2 - std::numbers::sqrt2) <= 0.05 * std::numbers::sqrt2;
    detail = fmt("I_R %.4f %.4f %.4f, growth %.4f %.4f vs sqrt2", i16, i32, i64, r1, r2);
    return neg && growth;
}

bool c10_pullout(std::string& detail) {
    const auto rep = ineq::pullout_test(6, 3, 0.5, 1000, 42);
    detail = fmt("1000 trials, worst margin %.3e", rep.worst_margin);
    return rep.worst_margin >= -1e-10;
}

bool c11_ims(std::string& detail) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    double worst_rel = 0.0;
    for (int n : {8, 24, 64, 128}) {
        for (int parts : {1, 2, 4}) {
            core::SymmetricMatrix h(n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i <= j; ++i) {
                    const double v = g(rng);
                    h(i, j) = v;
                    h(j, i) = v;
                }
            std::vector<std::vector<double>> theta(parts, std::vector<double>(n));
            for (int i = 0; i < n; ++i) {
                double norm = 0.0;
                for (int k = 0; k < parts; ++k) {
                    theta[k][i] = u(rng);
                    norm += theta[k][i] * theta[k][i];
                }
                for (int k = 0; k < parts; ++k) theta[k][i] /= std::sqrt(norm);
            }
            worst_rel = std::max(worst_rel, ineq::ims_identity_test(h, theta) / h.max_abs());
        }
    }
    {
        const core::RadialGrid grid(0.05, 700);
        const auto pot = grid.sample([](double r) { return -1.0 / r; });
        const auto op = spectral::build_channel(grid, 0, pot);
        const auto h = op.hamiltonian_nonrelativistic_dense();
        const core::CutoffProfile prof;
        std::vector<std::vector<double>> theta(2);
        theta[0] = prof.sample(grid, 10.0);
        theta[1] = grid.sample([&](double r) { return prof.partner(r / 10.0); });
        worst_rel = std::max(worst_rel, ineq::ims_identity_test(h, theta) / h.max_abs());
    }
    detail = fmt("worst relative residual %.3e over the battery", worst_rel);
    return worst_rel <= 1e-12;
}

bool c12_daubechies_mcdly(std::string& detail) {
    std::vector<ineq::RadialWell> wells;
    for (double d : {1.0, 4.0, 16.0})
        wells.push_back({"g", [d](double r) { return d * std::exp(-r * r); }});
    const auto daub = ineq::daubechies_stability(0.1, wells, {});
    const bool daub_ok = std::isfinite(daub.coarse.empirical_constant) &&
                         daub.coarse.empirical_constant > 0.0 && daub.drift <= 2.0;

    ineq::WellTraceConfig mc_cfg;
    mc_cfg.spacing = 0.0125;
    mc_cfg.box = 6.0;
    std::vector<ineq::RadialWell> battery = {
        {"none", [](double) { return 0.0; }},
        {"gauss", [](double r) { return 4.0 * std::exp(-r * r); }}};
    const auto crit_rep = ineq::mcdly_stability(0.1, critical / 0.1, battery, mc_cfg);
    const auto small = ineq::mcdly_constant(0.1, 1.0 / (128.0 * 0.1), battery, mc_cfg);
    const bool mcdly_ok = std::isfinite(crit_rep.coarse.empirical_constant) &&
                          crit_rep.drift <= 2.0 &&
                          small.metrics.at("constant_term_needed") == 0.0;
    detail = fmt("daubechies C %.4f drift %.3f; mcdly C %.4f drift %.3f, small-coupling "
                 "constant-free",
                 daub.coarse.empirical_constant, daub.drift,
                 crit_rep.coarse.empirical_constant, crit_rep.drift);
    return daub_ok && mcdly_ok;
}

bool c13_pauli(std::string& detail) {
    // spin degeneracy at zero gauge
    const pauli::LatticeBox box8(8.0, 8);
    const auto g0 = pauli::build_gauge(box8, pauli::FieldSpec::zero());
    const auto v0 =
        core::eigvals_herm(pauli::build_pauli(g0, std::vector<double>(box8.n_sites(), 0.0)).dense());
    double pair_gap = 0.0;
    for (std::size_t i = 0; i + 1 < v0.size(); i += 2)
        pair_gap = std::max(pair_gap, std::fabs(v0[i + 1] - v0[i]));
    const bool spin_ok = pair_gap <= 1e-10;

    // gauge covariance
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const auto gb = pauli::build_gauge(box8, pauli::FieldSpec::constant_b(2));
    std::vector<double> chi(box8.n_sites()), pot(box8.n_sites());
    for (auto& x : chi) x = u(rng);
    for (auto& x : pot) x = 0.2 * u(rng);
    const auto va = core::eigvals_herm(pauli::build_pauli(gb, pot).dense());
    const auto vb =
        core::eigvals_herm(pauli::build_pauli(pauli::gauge_transformed(gb, chi), pot).dense());
    double gauge_diff = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i)
        gauge_diff = std::max(gauge_diff, std::fabs(va[i] - vb[i]));
    const bool gauge_ok = gauge_diff <= 1e-9;

    // constant-B lowest eigenvalue magnitude strictly decreasing
    std::vector<double> mags;
    for (int n : {8, 16, 32}) {
        const pauli::LatticeBox box(8.0, n);
        const auto gg = pauli::build_gauge(box, pauli::FieldSpec::constant_b(2));
        const auto lz = pauli::lanczos_min_eig(
            pauli::build_pauli(gg, std::vector<double>(box.n_sites(), 0.0)), 400, 1);
        mags.push_back(std::fabs(lz.value));
    }
    const bool landau_ok = mags[1] < mags[0] && mags[2] < mags[1];

    // CPHLT fitted constant stable within 2x over the box ladder
    double c_min = 1e300, c_max = 0.0;
    for (int n : {8, 10, 12}) {
        const pauli::LatticeBox box(8.0, n);
        const auto gg = pauli::build_gauge(box, pauli::FieldSpec::bump(0.5, 1.4));
        std::vector<double> v(box.n_sites());
        const double a = box.spacing(), c = 4.0;
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    const double dx = a * i - c, dy = a * j - c, dz = a * k - c;
                    v[box.index(i, j, k)] = 3.0 * std::exp(-(dx * dx + dy * dy + dz * dz));
                }
        const auto rep = pauli::cphlt_check(gg, {{"gauss", v}}, true);
        c_min = std::min(c_min, rep.empirical_constant);
        c_max = std::max(c_max, rep.empirical_constant);
    }
    const double drift = c_max / c_min;
    const bool cphlt_ok = drift <= 2.0;

    detail = fmt("spin gap %.1e, gauge diff %.1e, landau |min| %.1e %.1e %.1e, cphlt drift %.3f",
                 pair_gap, gauge_diff, mags[0], mags[1], mags[2], drift);
    return spin_ok && gauge_ok && landau_ok && cphlt_ok;
}

#ifndef SCOTTLAB_CLI_PATH
#define SCOTTLAB_CLI_PATH "scottlab"
#endif

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool c14_determinism(std::string& detail) {
    const fs::path base = fs::temp_directory_path() / "scottlab_determinism";
    fs::remove_all(base);
    fs::create_directories(base);
    const std::string cli = SCOTTLAB_CLI_PATH;
    const std::vector<std::string> cmds = {
        "tf --Z 1 ",
        "scott --alphas 0 --R 8,16 ",
        "verify --family pullout ",
    };
    for (const auto& cmd : cmds) {
        for (int rep = 0; rep < 2; ++rep) {
            const fs::path out = base / (std::to_string(&cmd - cmds.data()) + "_" +
                                         std::to_string(rep));
            const std::string full =
                cli + " " + cmd + "--out " + out.string() + " >/dev/null 2>&1";
            if (std::system(full.c_str()) != 0) {
                detail = "command failed: " + cmd;
                return false;
            }
        }
    }
    for (std::size_t c = 0; c < cmds.size(); ++c) {
        const fs::path d0 = base / (std::to_string(c) + "_0");
        const fs::path d1 = base / (std::to_string(c) + "_1");
        for (const auto& entry : fs::directory_iterator(d0)) {
            const std::string name = entry.path().filename().string();
            if (name == "manifest.json") {
                // wall times differ; the recorded output digests must not
                const auto m0 = nlohmann::json::parse(slurp(entry.path()));
                const auto m1 = nlohmann::json::parse(slurp(d1 / name));
                if (m0["outputs"] != m1["outputs"] || m0["config"] != m1["config"]) {
                    detail = "manifest digests differ for " + cmds[c];
                    return false;
                }
                continue;
            }
            if (slurp(entry.path()) != slurp(d1 / name)) {
                detail = "byte mismatch in " + name + " for " + cmds[c];
                return false;
            }
        }
    }
    detail = "3 commands, reruns byte-identical";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Check> checks = {
        {1, "TF universal slope -1.588071 within 1e-4", 1.5, c1_slope},
        {2, "TF semiclassical identity within 1e-3", 10.0, c2_semiclassical},
        {3, "Z^{7/3} energy scaling within 1e-3", 30.0, c3_scaling},
        {4, "Euler-Lagrange residual <= 1e-3 for Z in {1,8}", 30.0, c4_euler_lagrange},
        {5, "hydrogen levels within 1e-4 after extrapolation", 30.0, c5_hydrogen},
        {6, "relativistic Hardy: critical floor and supercritical collapse", 60.0, c6_hardy},
        {7, "nonrelativistic 2*S2 = 1/2 within 0.05", 600.0, c7_scott_nonrel},
        {8, "S2 table non-increasing, finite at criticality", 1800.0, c8_scott_table},
        {9, "I_R negative with sqrt(R) growth within 5%", 60.0, c9_ir},
        {10, "pull-out formula, 1000 trials at -1e-10", 30.0, c10_pullout},
        {11, "IMS identity residual <= 1e-12 * ||h||", 60.0, c11_ims},
        {12, "Daubechies/MCDLY constants finite, 2x-stable, no constant term", 600.0,
         c12_daubechies_mcdly},
        {13, "Pauli lattice: spin, gauge, Landau ladder, CPHLT 2x", 900.0, c13_pauli},
        {14, "manifest determinism: reruns byte-identical", 300.0, c14_determinism},
    };

    int selected = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            selected = std::atoi(argv[i + 1]);

    bool all_ok = true;
    for (auto& c : checks) {
        if (selected != 0 && c.id != selected) continue;
        std::string detail;
        const auto t0 = clock_type::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
        if (secs > c.time_limit_s) {
            ok = false;
            detail += fmt(" [over time budget %.0fs]", c.time_limit_s);
        }
        std::printf("criterion %2d %s (%7.2fs)  %s -- %s\n", c.id, ok ? "PASS" : "FAIL", secs,
                    c.label, detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
