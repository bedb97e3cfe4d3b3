// helstrom-flow CLI: reproduction harness for the information-flow analyses.
// Subcommands: dephasing-scan, dephasing-surface, cnot, verify-bounds.
// Exit codes: 0 ok, 2 config error, 3 numerical error, 4 property violation.

#include "commands.hpp"
#include "config.hpp"

#include "helstromflow/eig.hpp"
#include "helstromflow/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

namespace {

struct SubcommandBinding {
    hfcli::CommonOptions options;
    std::function<int(const hfcli::CommonOptions&)> run;
};

void attach_common_options(CLI::App* sub, hfcli::CommonOptions& opts) {
    sub->add_option("--config", opts.config_path, "Path to a flat JSON config file");
    sub->add_option("--seed", opts.seed_override, "Seed override (takes precedence over config)");
    sub->add_option("--out-dir", opts.out_dir_override, "Output directory override");
    sub->add_option("--threads", opts.threads_override,
                    "Worker thread count (0 = hardware); HELSTROM_FLOW_THREADS is the fallback");
}

std::optional<std::uint64_t> threads_from_env() {
    const char* raw = std::getenv("HELSTROM_FLOW_THREADS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == nullptr || *end != '\0') {
        throw hfcli::ConfigError("HELSTROM_FLOW_THREADS is not a valid integer");
    }
    return parsed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"helstrom-flow: weighted state discrimination, information flow, "
                 "and local detection of initial correlations"};
    app.set_version_flag("--version", std::string(hflow::version));
    app.require_subcommand(1);

    SubcommandBinding scan{{}, hfcli::cmd_dephasing_scan};
    SubcommandBinding surface{{}, hfcli::cmd_dephasing_surface};
    SubcommandBinding cnot{{}, hfcli::cmd_cnot};
    SubcommandBinding verify{{}, hfcli::cmd_verify_bounds};

    attach_common_options(
        app.add_subcommand("dephasing-scan",
                           "Monte Carlo detection-frequency scan over (p1, lambda); writes scan.csv"),
        scan.options);
    attach_common_options(
        app.add_subcommand("dephasing-surface",
                           "Helstrom-norm surfaces over (alpha, t); one CSV per (p1, lambda)"),
        surface.options);
    attach_common_options(
        app.add_subcommand("cnot",
                           "Two-qubit gate example: witness rise, bound, closed form; writes cnot.csv"),
        cnot.options);
    attach_common_options(
        app.add_subcommand("verify-bounds",
                           "Randomized certification of the information-flow inequalities; "
                           "writes verify.json"),
        verify.options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    SubcommandBinding* selected = nullptr;
    if (app.got_subcommand("dephasing-scan")) selected = &scan;
    else if (app.got_subcommand("dephasing-surface")) selected = &surface;
    else if (app.got_subcommand("cnot")) selected = &cnot;
    else selected = &verify;

    try {
        if (!selected->options.threads_override) {
            selected->options.threads_override = threads_from_env();
        }
        return selected->run(selected->options);
    } catch (const hfcli::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const hflow::NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
