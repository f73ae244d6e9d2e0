#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "scottlab/core/cutoff.hpp"
#include "scottlab/core/eig.hpp"
#include "scottlab/core/quadrature.hpp"
#include "scottlab/ineq/daubechies.hpp"
#include "scottlab/ineq/ims.hpp"
#include "scottlab/ineq/mcdly.hpp"
#include "scottlab/ineq/monotone.hpp"
#include "scottlab/ineq/pullout.hpp"
#include "scottlab/io/csv.hpp"
#include "scottlab/io/manifest.hpp"
#include "scottlab/pauli/cphlt.hpp"
#include "scottlab/pauli/lanczos.hpp"
#include "scottlab/pauli/spinor.hpp"
#include "scottlab/scott/ir.hpp"
#include "scottlab/scott/table.hpp"
#include "scottlab/simd/kernels.hpp"
#include "scottlab/spectral/channel.hpp"
#include "scottlab/spectral/hardy.hpp"
#include "scottlab/spectral/hydrogen.hpp"
#include "scottlab/tf/atom.hpp"
#include "scottlab/tf/energy.hpp"
#include "scottlab/tf/semiclassical.hpp"

namespace scottlab::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr double critical_coupling = 2.0 / std::numbers::pi;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

io::RunManifest make_manifest(const RunContext& ctx, const std::string& command) {
    io::RunManifest m;
    m.command = command;
    m.seed = ctx.seed;
    m.version = "scottlab 0.1.0";
    m.simd_backend = std::string(kern::backend_name());
    return m;
}

void finalize_manifest(io::RunManifest& m, const RunContext& ctx, clock_type::time_point t0) {
    m.config = ctx.config.resolved();
    m.wall_seconds = seconds_since(t0);
    m.write(ctx.out_dir / "manifest.json");
}

void write_json(const fs::path& path, const ordered_json& j) {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open " + path.string());
    const std::string s = j.dump(2) + "\n";
    std::fwrite(s.data(), 1, s.size(), f);
    std::fclose(f);
}

std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

ordered_json report_json(const ineq::InequalityReport& rep) {
    ordered_json j;
    j["family"] = rep.family;
    j["cases_run"] = rep.cases_run;
    j["worst_margin"] = rep.worst_margin;
    j["empirical_constant"] = rep.empirical_constant;
    j["metrics"] = rep.metrics;
    ordered_json rows = ordered_json::array();
    for (const auto& c : rep.cases)
        rows.push_back({{"label", c.label},
                        {"lhs", c.lhs},
                        {"rhs", c.rhs},
                        {"ratio", c.ratio},
                        {"margin", c.margin}});
    j["cases"] = rows;
    return j;
}

}  // namespace

int run_tf(RunContext& ctx) {
    const auto t0 = clock_type::now();
    const auto& cfg = ctx.config;
    const std::vector<double> z_list = cfg.get_double_list("tf.z_list", {1.0});
    const double spacing_scale = cfg.get_double("tf.spacing_scale", 0.01);
    const double extent_scale = cfg.get_double("tf.extent_scale", 40.0);
    const double ode_tol = cfg.get_double("tf.ode_tolerance", 1e-6);
    const double ode_smax = cfg.get_double("tf.ode_smax", 400.0);
    if (z_list.empty()) throw std::invalid_argument("tf: empty Z list");
    for (double z : z_list)
        if (!(z > 0.0)) throw std::invalid_argument("tf: Z must be positive");
    if (!(spacing_scale > 0.0) || !(extent_scale > 0.0))
        throw std::invalid_argument("tf: grid scales must be positive");

    fs::create_directories(ctx.out_dir);
    io::RunManifest manifest = make_manifest(ctx, "tf");

    const auto t_ode = clock_type::now();
    const tf::UniversalTFSolution universal = tf::solve_tf_ode(ode_tol, ode_smax);
    manifest.stage_seconds["ode"] = seconds_since(t_ode);

    ordered_json summary;
    summary["universal"] = {{"initial_slope", universal.initial_slope},
                            {"slope_bracket", universal.slope_bracket},
                            {"far_field_exponent", universal.far_field_exponent},
                            {"ode_residual", universal.ode_residual()}};
    ordered_json atoms = ordered_json::array();
    std::vector<tf::TFAtom> solved;
    for (double z : z_list) {
        const double scale = std::pow(z, -1.0 / 3.0);
        const core::RadialGrid grid =
            core::grid_for_extent(spacing_scale * scale, extent_scale * scale);
        const tf::TFAtom atom = tf::tf_atom(z, grid, universal);
        const tf::VtfBounds bounds = tf::vtf_bound_constants(atom);
        const std::vector<double> ones(grid.n_points(), 1.0);
        const double sc = tf::sc_energy(atom.v_tf, ones, grid);

        io::CsvWriter table(ctx.out_dir / ("tf_Z" + format_g(z) + ".csv"),
                            {"r", "rho", "v_tf"});
        for (int i = 0; i < grid.n_points(); ++i)
            table.row({grid.r(i), atom.rho[i], atom.v_tf[i]});
        table.close();
        manifest.add_output(table.path(), ctx.out_dir);

        atoms.push_back({{"Z", z},
                         {"length_scale", atom.length_scale},
                         {"e_tf", atom.e_tf},
                         {"d_self", atom.d_self},
                         {"mass", atom.mass},
                         {"el_residual", atom.el_residual},
                         {"hartree_residual", atom.hartree_residual},
                         {"sc_energy", sc},
                         {"sc_identity_rel_err",
                          std::fabs(sc - (atom.e_tf + atom.d_self)) / std::fabs(atom.e_tf)},
                         {"sup_coulomb_defect_scaled", bounds.coulomb_defect_scaled},
                         {"sup_rv_over_z", bounds.rv_over_z},
                         {"sup_r4v", bounds.r4v}});
        solved.push_back(std::move(atom));
    }
    summary["atoms"] = atoms;

    bool numeric_ok = true;
    ordered_json scaling = ordered_json::array();
    for (std::size_t i = 0; i + 1 < solved.size(); ++i) {
        const double ratio = solved[i + 1].e_tf / solved[i].e_tf;
        const double expected = std::pow(z_list[i + 1] / z_list[i], 7.0 / 3.0);
        const double rel = std::fabs(ratio - expected) / expected;
        scaling.push_back({{"Z_from", z_list[i]},
                           {"Z_to", z_list[i + 1]},
                           {"ratio", ratio},
                           {"expected", expected},
                           {"rel_err", rel}});
        if (rel > 1e-3) numeric_ok = false;
    }
    summary["scaling_checks"] = scaling;
    summary["pass"] = numeric_ok;
    write_json(ctx.out_dir / "tf_summary.json", summary);
    manifest.add_output(ctx.out_dir / "tf_summary.json", ctx.out_dir);
    finalize_manifest(manifest, ctx, t0);
    return numeric_ok ? 0 : 1;
}

int run_scott(RunContext& ctx) {
    const auto t0 = clock_type::now();
    const auto& cfg = ctx.config;
    const std::vector<double> alphas = cfg.get_double_list("scott.alphas", {});
    const std::vector<double> rs = cfg.get_double_list("scott.r_schedule", {8.0, 16.0, 32.0});
    const std::string profile_id = cfg.get_string("scott.profile", "cos-smoothstep5");
    const double d_coef = cfg.get_double("scott.d_coef", 0.0);
    scott::ScottConfig sc_cfg;
    sc_cfg.spacing = cfg.get_double("scott.spacing", 0.0);
    sc_cfg.box_factor = cfg.get_double("scott.box_factor", 4.0);
    sc_cfg.ell_truncation_tol = cfg.get_double("scott.ell_tol", 1e-6);
    sc_cfg.lambda_field = cfg.get_double("scott.lambda_field", 0.0);
    if (alphas.empty()) throw std::invalid_argument("scott: empty alpha list");
    const core::CutoffProfile profile = core::CutoffProfile::by_id(profile_id);

    fs::create_directories(ctx.out_dir);
    io::RunManifest manifest = make_manifest(ctx, "scott");

    const scott::ScottTable table = scott::scott_table(alphas, rs, profile, d_coef, sc_cfg);

    io::CsvWriter csv(ctx.out_dir / "scott.csv",
                      {"alpha", "R", "trace", "I_R", "s2_estimate", "err_bar", "ell_max",
                       "tail_estimate"});
    for (const auto& row : table.rows) {
        double prev = 0.0;
        for (std::size_t i = 0; i < row.history.size(); ++i) {
            const auto& st = row.history[i];
            const double err = i == 0 ? 0.0 : std::fabs(st.s2 - prev);
            csv.row({row.alpha, st.R, st.trace, st.i_r, st.s2, err,
                     static_cast<double>(st.ell_max), st.tail});
            prev = st.s2;
        }
    }
    csv.close();
    manifest.add_output(csv.path(), ctx.out_dir);

    ordered_json summary;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"alpha", row.alpha},
                        {"s2_final", row.s2_estimate},
                        {"s2_extrapolated", row.s2_extrapolated},
                        {"err_bar", row.err_bar},
                        {"ell_max", row.ell_max_used},
                        {"grid_spacing", row.grid_spacing},
                        {"grid_points", row.grid_points}});
    summary["rows"] = rows;
    summary["monotone_ok"] = table.monotone_ok;
    summary["monotonicity_tol"] = table.monotonicity_tol;
    ordered_json checks = ordered_json::array();
    for (const auto& chk : table.profile_checks)
        checks.push_back({{"alpha", chk.alpha},
                          {"s2_primary", chk.s2_primary},
                          {"s2_alternate", chk.s2_alternate},
                          {"alternate_profile", chk.alternate_id}});
    summary["profile_checks"] = checks;
    summary["max_profile_difference"] = table.max_profile_difference;
    summary["profile"] = profile_id;
    summary["field_slice"] = "A=0 (no minimization over vector potentials)";
    write_json(ctx.out_dir / "scott_summary.json", summary);
    manifest.add_output(ctx.out_dir / "scott_summary.json", ctx.out_dir);
    finalize_manifest(manifest, ctx, t0);
    return table.monotone_ok ? 0 : 1;
}

int run_semiclassics(RunContext& ctx) {
    const auto t0 = clock_type::now();
    const auto& cfg = ctx.config;
    const std::vector<double> z_list = cfg.get_double_list("sc.z_list", {1.0});
    const double spacing_scale = cfg.get_double("sc.spacing_scale", 0.01);
    const double extent_scale = cfg.get_double("sc.extent_scale", 40.0);
    const std::vector<double> ir_rs = cfg.get_double_list("sc.ir_r_list", {8.0, 16.0, 32.0, 64.0});
    const std::string profile_id = cfg.get_string("sc.profile", "cos-smoothstep5");
    const double ode_tol = cfg.get_double("sc.ode_tolerance", 1e-6);
    if (z_list.empty()) throw std::invalid_argument("semiclassics: empty Z list");
    const core::CutoffProfile profile = core::CutoffProfile::by_id(profile_id);

    fs::create_directories(ctx.out_dir);
    io::RunManifest manifest = make_manifest(ctx, "semiclassics");
    const tf::UniversalTFSolution universal = tf::solve_tf_ode(ode_tol);

    bool ok = true;
    io::CsvWriter csv(ctx.out_dir / "semiclassics.csv",
                      {"Z", "sc_energy", "e_tf", "d_self", "e_plus_d", "rel_diff"});
    for (double z : z_list) {
        const double scale = std::pow(z, -1.0 / 3.0);
        const core::RadialGrid grid =
            core::grid_for_extent(spacing_scale * scale, extent_scale * scale);
        const tf::TFAtom atom = tf::tf_atom(z, grid, universal);
        const std::vector<double> ones(grid.n_points(), 1.0);
        const double sc = tf::sc_energy(atom.v_tf, ones, grid);
        const double rel = std::fabs(sc - (atom.e_tf + atom.d_self)) / std::fabs(atom.e_tf);
        csv.row({z, sc, atom.e_tf, atom.d_self, atom.e_tf + atom.d_self, rel});
        if (rel > 1e-3) ok = false;
    }
    csv.close();
    manifest.add_output(csv.path(), ctx.out_dir);

    io::CsvWriter irc(ctx.out_dir / "ir_scaling.csv", {"R", "i_r", "growth", "sqrt2_rel_err"});
    double prev = 0.0;
    for (std::size_t i = 0; i < ir_rs.size(); ++i) {
        const double R = ir_rs[i];
        const core::RadialGrid grid = core::grid_for_extent(1.0 / 64.0, 2.0 * R + 1.0);
        const double v = scott::i_r(profile, R, grid);
        if (v >= 0.0) ok = false;
        double growth = 0.0, rel = 0.0;
        if (i > 0) {
            growth = v / prev;
            rel = std::fabs(growth - std::numbers::sqrt2) / std::numbers::sqrt2;
            if (R >= 32.0 && rel > 0.05) ok = false;  // R and R/2 both >= 16
        }
        irc.row({R, v, growth, rel});
        prev = v;
    }
    irc.close();
    manifest.add_output(irc.path(), ctx.out_dir);
    finalize_manifest(manifest, ctx, t0);
    return ok ? 0 : 1;
}

namespace {

struct VerifyOutcome {
    bool hard_pass = true;
};

void verify_pullout(RunContext& ctx, io::RunManifest& manifest, VerifyOutcome& out) {
    const auto& cfg = ctx.config;
    const int n = cfg.get_int("verify.pullout.order", 6);
    const int parts = cfg.get_int("verify.pullout.parts", 3);
    const double a = cfg.get_double("verify.pullout.exponent", 0.5);
    const int trials = cfg.get_int("verify.pullout.trials", 1000);
    const auto rep = ineq::pullout_test(n, parts, a, trials, static_cast<unsigned>(ctx.seed));
    const bool pass = rep.worst_margin >= -1e-10;
    ordered_json j = report_json(rep);
    j["pass"] = pass;
    write_json(ctx.out_dir / "verify_pullout.json", j);
    manifest.add_output(ctx.out_dir / "verify_pullout.json", ctx.out_dir);
    out.hard_pass = out.hard_pass && pass;
}

void verify_ims(RunContext& ctx, io::RunManifest& manifest, VerifyOutcome& out) {
    std::mt19937_64 rng(ctx.seed + 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    double worst_rel = 0.0;
    int cases = 0;

    auto random_partition = [&](int n, int parts) {
        std::vector<std::vector<double>> theta(parts, std::vector<double>(n));
        for (int i = 0; i < n; ++i) {
            double norm = 0.0;
            for (int k = 0; k < parts; ++k) {
                theta[k][i] = unif(rng);
                norm += theta[k][i] * theta[k][i];
            }
            norm = std::sqrt(norm);
            for (int k = 0; k < parts; ++k) theta[k][i] /= norm;
        }
        return theta;
    };
    for (int n : {8, 40, 96}) {
        for (int parts : {1, 2, 3}) {
            core::SymmetricMatrix h(n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i <= j; ++i) {
                    const double v = gauss(rng);
                    h(i, j) = v;
                    h(j, i) = v;
                }
            const double res = ineq::ims_identity_test(h, random_partition(n, parts));
            worst_rel = std::max(worst_rel, res / h.max_abs());
            ++cases;
        }
    }
    // smooth two-part split of a Coulomb channel
    {
        const core::RadialGrid grid(0.1, 300);
        const auto pot = grid.sample([](double r) { return -1.0 / r; });
        const auto op = spectral::build_channel(grid, 0, pot);
        const core::SymmetricMatrix h = op.hamiltonian_nonrelativistic_dense();
        const core::CutoffProfile prof;
        std::vector<std::vector<double>> theta(2);
        theta[0] = prof.sample(grid, 8.0);
        theta[1] = grid.sample([&](double r) { return prof.partner(r / 8.0); });
        const double res = ineq::ims_identity_test(h, theta);
        worst_rel = std::max(worst_rel, res / h.max_abs());
        ++cases;
    }
    const bool pass = worst_rel <= 1e-12;
    ordered_json j;
    j["family"] = "ims";
    j["cases_run"] = cases;
    j["worst_relative_residual"] = worst_rel;
    j["pass"] = pass;
    write_json(ctx.out_dir / "verify_ims.json", j);
    manifest.add_output(ctx.out_dir / "verify_ims.json", ctx.out_dir);
    out.hard_pass = out.hard_pass && pass;
}

void verify_monotone(RunContext& ctx, io::RunManifest& manifest, VerifyOutcome& out) {
    const int samples = ctx.config.get_int("verify.monotone.samples", 100000);
    const auto rep = ineq::monotone_shift_test(samples, 7);
    const bool pass = rep.violations == 0;
    ordered_json j;
    j["family"] = "monotone-shift";
    j["samples"] = rep.samples;
    j["violations"] = rep.violations;
    j["worst_gap"] = rep.worst_gap;
    j["pass"] = pass;
    write_json(ctx.out_dir / "verify_monotone.json", j);
    manifest.add_output(ctx.out_dir / "verify_monotone.json", ctx.out_dir);
    out.hard_pass = out.hard_pass && pass;
}

void verify_hardy(RunContext& ctx, io::RunManifest& manifest, VerifyOutcome& out) {
    const auto& cfg = ctx.config;
    const double extent = cfg.get_double("verify.hardy.extent", 40.0);
    std::vector<core::RadialGrid> crit_ladder, super_ladder;
    for (double h : {0.08, 0.04, 0.02, 0.0125})
        crit_ladder.push_back(core::grid_for_extent(h, extent));
    for (double h : {0.02, 0.01, 0.005})
        super_ladder.push_back(core::grid_for_extent(h, extent));

    const auto crit = spectral::hardy_report(critical_coupling, crit_ladder);
    const auto sup = spectral::hardy_report(0.70, super_ladder);
    bool crit_ok = !crit.divergence_signature;
    for (double v : crit.min_eigs) crit_ok = crit_ok && v >= -0.01;
    const bool pass = crit_ok && sup.divergence_signature;

    ordered_json j;
    j["family"] = "hardy";
    j["critical"] = {{"coupling", crit.coupling},
                     {"spacings", crit.spacings},
                     {"min_eigs", crit.min_eigs},
                     {"divergence_signature", crit.divergence_signature}};
    j["supercritical"] = {{"coupling", sup.coupling},
                          {"spacings", sup.spacings},
                          {"min_eigs", sup.min_eigs},
                          {"divergence_signature", sup.divergence_signature}};
    j["pass"] = pass;
    write_json(ctx.out_dir / "verify_hardy.json", j);
    manifest.add_output(ctx.out_dir / "verify_hardy.json", ctx.out_dir);
    out.hard_pass = out.hard_pass && pass;
}

std::vector<ineq::RadialWell> gaussian_wells(const std::vector<double>& depths) {
    std::vector<ineq::RadialWell> wells;
    for (double d : depths)
        wells.push_back({"gauss-depth-" + format_g(d),
                         [d](double r) { return d * std::exp(-r * r); }});
    return wells;
}

void verify_daubechies(RunContext& ctx, io::RunManifest& manifest) {
    const auto& cfg = ctx.config;
    const double alpha = cfg.get_double("verify.daub.alpha", 0.1);
    const auto depths = cfg.get_double_list("verify.daub.depths", {1.0, 4.0, 16.0});
    const auto st = ineq::daubechies_stability(alpha, gaussian_wells(depths), {});
    ordered_json j = report_json(st.coarse);
    j["refined"] = report_json(st.fine);
    j["drift"] = st.drift;
    j["stable_2x"] = st.drift <= 2.0;
    write_json(ctx.out_dir / "verify_daubechies.json", j);
    manifest.add_output(ctx.out_dir / "verify_daubechies.json", ctx.out_dir);
}

void verify_mcdly(RunContext& ctx, io::RunManifest& manifest) {
    const auto& cfg = ctx.config;
    const double alpha = cfg.get_double("verify.mcdly.alpha", 0.1);
    std::vector<ineq::RadialWell> battery = gaussian_wells({4.0});
    battery.insert(battery.begin(), {"no-well", [](double) { return 0.0; }});

    const double nu_crit = critical_coupling / alpha;
    const auto crit = ineq::mcdly_stability(alpha, nu_crit, battery, {});
    const double nu_small = 1.0 / (128.0 * alpha);
    const auto small = ineq::mcdly_constant(alpha, nu_small, battery, {});

    ordered_json j;
    j["critical_coupling_battery"] = report_json(crit.coarse);
    j["critical_coupling_refined"] = report_json(crit.fine);
    j["drift"] = crit.drift;
    j["stable_2x"] = crit.drift <= 2.0;
    j["small_coupling_battery"] = report_json(small);
    write_json(ctx.out_dir / "verify_mcdly.json", j);
    manifest.add_output(ctx.out_dir / "verify_mcdly.json", ctx.out_dir);
}

ordered_json cphlt_battery_json(const std::vector<int>& n_list, double box_len, double bump_amp,
                                double bump_width, double well_depth, double* stability);

void verify_cphlt(RunContext& ctx, io::RunManifest& manifest) {
    const auto& cfg = ctx.config;
    std::vector<double> raw = cfg.get_double_list("verify.cphlt.n_list", {8.0, 10.0});
    std::vector<int> n_list(raw.begin(), raw.end());
    const double box_len = cfg.get_double("verify.cphlt.box_length", 8.0);
    const double amp = cfg.get_double("verify.cphlt.bump_amplitude", 0.5);
    const double width = cfg.get_double("verify.cphlt.bump_width", 1.4);
    const double depth = cfg.get_double("verify.cphlt.well_depth", 3.0);
    double stability = 0.0;
    ordered_json j = cphlt_battery_json(n_list, box_len, amp, width, depth, &stability);
    write_json(ctx.out_dir / "verify_cphlt.json", j);
    manifest.add_output(ctx.out_dir / "verify_cphlt.json", ctx.out_dir);
}

ordered_json cphlt_battery_json(const std::vector<int>& n_list, double box_len, double bump_amp,
                                double bump_width, double well_depth, double* stability) {
    ordered_json ladder = ordered_json::array();
    double c_min = 1e300, c_max = 0.0;
    for (int n : n_list) {
        const pauli::LatticeBox box(box_len, n);
        std::vector<pauli::SitePotential> battery;
        battery.push_back({"v-zero", std::vector<double>(box.n_sites(), 0.0)});
        {
            std::vector<double> v(box.n_sites());
            const double a = box.spacing(), c = 0.5 * box_len;
            for (int k = 0; k < n; ++k)
                for (int jj = 0; jj < n; ++jj)
                    for (int i = 0; i < n; ++i) {
                        const double dx = a * i - c, dy = a * jj - c, dz = a * k - c;
                        v[box.index(i, jj, k)] =
                            well_depth * std::exp(-(dx * dx + dy * dy + dz * dz));
                    }
            battery.push_back({"v-gauss-" + format_g(well_depth), v});
        }
        ordered_json per_field = ordered_json::array();
        for (const bool with_field : {false, true}) {
            const pauli::GaugeField gauge =
                with_field ? pauli::build_gauge(box, pauli::FieldSpec::bump(bump_amp, bump_width))
                           : pauli::build_gauge(box, pauli::FieldSpec::zero());
            const auto rep = pauli::cphlt_check(gauge, battery, true);
            if (rep.empirical_constant > 0.0) {
                c_min = std::min(c_min, rep.empirical_constant);
                c_max = std::max(c_max, rep.empirical_constant);
            }
            ordered_json r = report_json(rep);
            r["field"] = gauge.spec_id;
            per_field.push_back(std::move(r));
        }
        ladder.push_back({{"sites_per_side", n}, {"reports", per_field}});
    }
    ordered_json j;
    j["family"] = "cphlt";
    j["ladder"] = ladder;
    const double drift = (c_min < 1e300 && c_min > 0.0) ? c_max / c_min : 1.0;
    j["constant_drift"] = drift;
    j["stable_2x"] = drift <= 2.0;
    if (stability) *stability = drift;
    return j;
}

}  // namespace

int run_verify(RunContext& ctx) {
    const auto t0 = clock_type::now();
    const std::string family = ctx.config.get_string("verify.family", "all");
    const bool all = family == "all";
    if (!all && family != "pullout" && family != "ims" && family != "monotone" &&
        family != "hardy" && family != "daubechies" && family != "mcdly" && family != "cphlt")
        throw std::invalid_argument("verify: unknown family " + family);

    fs::create_directories(ctx.out_dir);
    io::RunManifest manifest = make_manifest(ctx, "verify");
    VerifyOutcome out;

    auto stage = [&](const char* name, auto&& fn) {
        const auto t = clock_type::now();
        fn();
        manifest.stage_seconds[name] = seconds_since(t);
    };
    if (all || family == "pullout") stage("pullout", [&] { verify_pullout(ctx, manifest, out); });
    if (all || family == "ims") stage("ims", [&] { verify_ims(ctx, manifest, out); });
    if (all || family == "monotone")
        stage("monotone", [&] { verify_monotone(ctx, manifest, out); });
    if (all || family == "hardy") stage("hardy", [&] { verify_hardy(ctx, manifest, out); });
    if (all || family == "daubechies")
        stage("daubechies", [&] { verify_daubechies(ctx, manifest); });
    if (all || family == "mcdly") stage("mcdly", [&] { verify_mcdly(ctx, manifest); });
    if (all || family == "cphlt") stage("cphlt", [&] { verify_cphlt(ctx, manifest); });

    finalize_manifest(manifest, ctx, t0);
    return out.hard_pass ? 0 : 1;  // fitted-constant families never gate the exit status
}

int run_pauli(RunContext& ctx) {
    const auto t0 = clock_type::now();
    const auto& cfg = ctx.config;
    const std::string checks = cfg.get_string("pauli.checks", "all");
    const double box_len = cfg.get_double("pauli.box_length", 8.0);
    const int flux = cfg.get_int("pauli.flux_quanta", 2);
    std::vector<double> raw = cfg.get_double_list("pauli.landau_n_list", {8.0, 16.0, 32.0});
    std::vector<int> landau_n(raw.begin(), raw.end());
    std::vector<double> raw2 = cfg.get_double_list("pauli.cphlt_n_list", {8.0, 10.0, 12.0});
    std::vector<int> cphlt_n(raw2.begin(), raw2.end());
    const double amp = cfg.get_double("pauli.bump_amplitude", 0.5);
    const double width = cfg.get_double("pauli.bump_width", 1.4);
    const double depth = cfg.get_double("pauli.well_depth", 3.0);
    const bool all = checks == "all";
    if (!all && checks != "spin" && checks != "gauge" && checks != "zeeman" &&
        checks != "landau" && checks != "cphlt")
        throw std::invalid_argument("pauli: unknown checks selector " + checks);

    fs::create_directories(ctx.out_dir);
    io::RunManifest manifest = make_manifest(ctx, "pauli");
    ordered_json report;
    report["topology"] = "periodic torus";
    bool hard_pass = true;

    if (all || checks == "spin") {
        const pauli::LatticeBox box(box_len, 8);
        const auto gauge = pauli::build_gauge(box, pauli::FieldSpec::zero());
        const auto op = pauli::build_pauli(gauge, std::vector<double>(box.n_sites(), 0.0));
        const auto vals = core::eigvals_herm(op.dense());
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < vals.size(); i += 2)
            worst = std::max(worst, std::fabs(vals[i + 1] - vals[i]));
        const bool pass = worst <= 1e-10;
        report["spin_degeneracy"] = {{"worst_pair_gap", worst}, {"pass", pass}};
        hard_pass = hard_pass && pass;
    }
    if (all || checks == "gauge") {
        const pauli::LatticeBox box(box_len, 8);
        const auto gauge = pauli::build_gauge(box, pauli::FieldSpec::constant_b(flux));
        std::mt19937_64 rng(ctx.seed + 2);
        std::uniform_real_distribution<double> unif(-3.0, 3.0);
        std::vector<double> chi(box.n_sites());
        for (auto& x : chi) x = unif(rng);
        std::vector<double> pot(box.n_sites());
        for (auto& x : pot) x = 0.2 * unif(rng);
        const auto va = core::eigvals_herm(pauli::build_pauli(gauge, pot).dense());
        const auto vb = core::eigvals_herm(
            pauli::build_pauli(pauli::gauge_transformed(gauge, chi), pot).dense());
        double worst = 0.0;
        for (std::size_t i = 0; i < va.size(); ++i)
            worst = std::max(worst, std::fabs(va[i] - vb[i]));
        const bool pass = worst <= 1e-9;
        report["gauge_covariance"] = {{"max_eig_diff", worst}, {"pass", pass}};
        hard_pass = hard_pass && pass;
    }
    if (all || checks == "zeeman") {
        const pauli::LatticeBox box(box_len, 8);
        const auto gauge = pauli::build_gauge(box, pauli::FieldSpec::constant_b(flux));
        pauli::GaugeField stripped = gauge;
        for (int d = 0; d < 3; ++d)
            std::fill(stripped.site_b[d].begin(), stripped.site_b[d].end(), 0.0);
        const std::vector<double> zero_pot(box.n_sites(), 0.0);
        const double with_z = core::eigvals_herm(pauli::build_pauli(gauge, zero_pot).dense())[0];
        const double without =
            core::eigvals_herm(pauli::build_pauli(stripped, zero_pot).dense())[0];
        const bool pass = with_z <= without + 1e-12;
        report["zeeman_sign"] = {{"min_with", with_z}, {"min_without", without}, {"pass", pass}};
        hard_pass = hard_pass && pass;
    }
    if (all || checks == "landau") {
        ordered_json ladder = ordered_json::array();
        std::vector<double> mags;
        for (int n : landau_n) {
            const pauli::LatticeBox box(box_len, n);
            const auto gauge = pauli::build_gauge(box, pauli::FieldSpec::constant_b(flux));
            const auto op = pauli::build_pauli(gauge, std::vector<double>(box.n_sites(), 0.0));
            const auto lz = pauli::lanczos_min_eig(op, 400, static_cast<unsigned>(ctx.seed));
            mags.push_back(std::fabs(lz.value));
            ladder.push_back({{"sites_per_side", n},
                              {"min_eig", lz.value},
                              {"residual", lz.residual},
                              {"iterations", lz.iterations}});
        }
        bool decreasing = true;
        for (std::size_t i = 1; i < mags.size(); ++i)
            decreasing = decreasing && mags[i] < mags[i - 1];
        report["landau_zero_mode"] = {{"ladder", ladder}, {"strictly_decreasing", decreasing}};
        hard_pass = hard_pass && decreasing;
    }
    if (all || checks == "cphlt") {
        double drift = 0.0;
        report["cphlt"] = cphlt_battery_json(cphlt_n, box_len, amp, width, depth, &drift);
    }

    report["hard_pass"] = hard_pass;
    write_json(ctx.out_dir / "pauli_report.json", report);
    manifest.add_output(ctx.out_dir / "pauli_report.json", ctx.out_dir);
    finalize_manifest(manifest, ctx, t0);
    return hard_pass ? 0 : 1;
}

}  // namespace scottlab::cli
