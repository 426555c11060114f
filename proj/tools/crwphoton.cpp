// crwphoton — single-photon transport and super-cavity resonance analysis for
// a coupled-resonator waveguide with two embedded two-level scatterers.
//
//   crwphoton spectrum   --preset fig3a --out fig3a.csv
//   crwphoton resonances --preset fig4b --format json
//   crwphoton profile    --preset fig9
//   crwphoton verify --level fast

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "crw/commands.hpp"
#include "crw/version.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string preset;
    std::string format;
    std::string out_path;
    bool no_timestamp = false;
    unsigned threads = 1;
    std::optional<double> kre, kim;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_k) {
    cmd->add_option("--config", args.config_path, "Path to a key=value config file");
    cmd->add_option("--preset", args.preset,
                    "Named preset (fig3a..fig3d, fig4a..fig4c, fig6a, fig6b, "
                    "fig7a..fig7c, fig9)");
    cmd->add_option("--format", args.format, "Output format: csv|json");
    cmd->add_option("--out", args.out_path, "Output path (default: stdout)");
    cmd->add_flag("--no-timestamp", args.no_timestamp,
                  "Omit the generated-at header line");
    cmd->add_option("--threads", args.threads, "Worker threads for sweeps");
    if (with_k) {
        cmd->add_option("--kre", args.kre, "Evaluate at this Re k instead of solving");
        cmd->add_option("--kim", args.kim, "Evaluate at this Im k instead of solving");
    }
}

crw::RunConfig resolve_config(const CommonArgs& args) {
    if (!args.config_path.empty() && !args.preset.empty()) {
        throw crw::ConfigError("use either --config or --preset, not both");
    }
    if (!args.config_path.empty()) return crw::load_config(args.config_path);
    if (!args.preset.empty()) return crw::load_preset(args.preset);
    throw crw::ConfigError("one of --config or --preset is required");
}

crw::OutputOptions resolve_options(const CommonArgs& args) {
    crw::OutputOptions opts;
    opts.timestamp = !args.no_timestamp;
    opts.threads = args.threads == 0 ? 1 : args.threads;
    if (args.format == "csv") opts.format = crw::OutputFormat::csv;
    else if (args.format == "json") opts.format = crw::OutputFormat::json;
    else if (!args.format.empty()) {
        throw crw::ConfigError("--format must be csv or json");
    }
    return opts;
}

int run_to_stream(const CommonArgs& args,
                  const std::function<int(std::ostream&)>& body) {
    if (args.out_path.empty() || args.out_path == "-") {
        return body(std::cout);
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << args.out_path << "'\n";
        return 1;
    }
    return body(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled-resonator waveguide single-photon toolkit"};
    app.set_version_flag("--version", crw::kVersion);
    app.require_subcommand(1);

    CommonArgs spec_args, res_args, prof_args, verify_args;
    std::string verify_level = "fast";

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "T(k), R(k) sweep (discrete model)");
    add_common(spectrum, spec_args, false);

    CLI::App* resonances =
        app.add_subcommand("resonances", "Quasi-bound-state report per mode");
    add_common(resonances, res_args, false);

    CLI::App* profile =
        app.add_subcommand("profile", "Wavefunction profiles and contours");
    add_common(profile, prof_args, true);

    CLI::App* verify =
        app.add_subcommand("verify", "Run the library invariant suites");
    verify->add_option("--level", verify_level, "fast|full");
    verify->add_option("--out", verify_args.out_path, "Report path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) {
            const auto cfg = resolve_config(spec_args);
            const auto opts = resolve_options(spec_args);
            return run_to_stream(spec_args, [&](std::ostream& out) {
                return crw::cmd_spectrum(cfg, out, opts);
            });
        }
        if (resonances->parsed()) {
            const auto cfg = resolve_config(res_args);
            const auto opts = resolve_options(res_args);
            return run_to_stream(res_args, [&](std::ostream& out) {
                return crw::cmd_resonances(cfg, out, opts);
            });
        }
        if (profile->parsed()) {
            const auto cfg = resolve_config(prof_args);
            const auto opts = resolve_options(prof_args);
            std::optional<crw::Complex> k_override;
            if (prof_args.kre || prof_args.kim) {
                k_override = crw::Complex(prof_args.kre.value_or(0.0),
                                          prof_args.kim.value_or(0.0));
            }
            return run_to_stream(prof_args, [&](std::ostream& out) {
                return crw::cmd_profile(cfg, out, opts, k_override);
            });
        }
        if (verify->parsed()) {
            crw::verify::Level level;
            if (verify_level == "fast") level = crw::verify::Level::fast;
            else if (verify_level == "full") level = crw::verify::Level::full;
            else {
                std::cerr << "error: --level must be fast or full\n";
                return 2;
            }
            return run_to_stream(verify_args, [&](std::ostream& out) {
                return crw::cmd_verify(level, out);
            });
        }
    } catch (const crw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
