#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

// flags land in the same key space as the config file; flags win
void apply_override(scottlab::io::Config& cfg, const std::string& key, const std::string& value) {
    if (!value.empty()) cfg.set(key, value);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scottlab - atomic Thomas-Fermi theory, localized relativistic traces and "
                 "operator-inequality batteries on the desk scale"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir;
    std::uint64_t seed = 12345;
    app.add_option("--config", config_path, "KEY=VALUE configuration file");
    app.add_option("--out", out_dir, "output directory (default runs/<command>)");
    app.add_option("--seed", seed, "base RNG seed recorded in the manifest");

    std::string tf_z, scott_alphas, scott_rs, scott_profile, verify_family, pauli_checks;
    std::string scott_spacing, sc_z;

    auto* tf_cmd = app.add_subcommand("tf", "atomic Thomas-Fermi tables and energy summary");
    tf_cmd->add_option("--Z", tf_z, "comma-separated nuclear charges (a.u.)");

    auto* scott_cmd =
        app.add_subcommand("scott", "localized-trace sweep: the S2 table over couplings");
    scott_cmd->add_option("--alphas", scott_alphas, "comma-separated couplings in [0, 2/pi]");
    scott_cmd->add_option("--R", scott_rs, "comma-separated cutoff scales (ascending)");
    scott_cmd->add_option("--profile", scott_profile,
                          "cutoff profile id (cos-smoothstep5, cos-smoothstep7, sharp)");
    scott_cmd->add_option("--spacing", scott_spacing, "grid spacing override (a.u.)");

    auto* sc_cmd = app.add_subcommand(
        "semiclassics", "phase-space energies: the TF identity and the I_R growth table");
    sc_cmd->add_option("--Z", sc_z, "comma-separated nuclear charges (a.u.)");

    auto* verify_cmd =
        app.add_subcommand("verify", "operator-inequality batteries and identity checks");
    verify_cmd->add_option("--family", verify_family,
                           "pullout|ims|monotone|hardy|daubechies|mcdly|cphlt|all");

    auto* pauli_cmd =
        app.add_subcommand("pauli", "lattice Pauli operator checks (fields, spin, traces)");
    pauli_cmd->add_option("--checks", pauli_checks, "spin|gauge|zeeman|landau|cphlt|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        scottlab::cli::RunContext ctx;
        if (!config_path.empty())
            ctx.config = scottlab::io::Config::from_file(config_path);
        ctx.seed = seed;

        apply_override(ctx.config, "tf.z_list", tf_z);
        apply_override(ctx.config, "scott.alphas", scott_alphas);
        apply_override(ctx.config, "scott.r_schedule", scott_rs);
        apply_override(ctx.config, "scott.profile", scott_profile);
        apply_override(ctx.config, "scott.spacing", scott_spacing);
        apply_override(ctx.config, "sc.z_list", sc_z);
        apply_override(ctx.config, "verify.family", verify_family);
        apply_override(ctx.config, "pauli.checks", pauli_checks);

        const std::string cmd = app.get_subcommands().front()->get_name();
        ctx.out_dir = out_dir.empty() ? std::filesystem::path("runs") / cmd
                                      : std::filesystem::path(out_dir);

        if (cmd == "tf") return scottlab::cli::run_tf(ctx);
        if (cmd == "scott") return scottlab::cli::run_scott(ctx);
        if (cmd == "semiclassics") return scottlab::cli::run_semiclassics(ctx);
        if (cmd == "verify") return scottlab::cli::run_verify(ctx);
        if (cmd == "pauli") return scottlab::cli::run_pauli(ctx);
        std::fprintf(stderr, "unknown command\n");
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
