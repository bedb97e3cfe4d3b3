// commands.hpp — the four reproduction commands behind the CLI subcommands

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hfcli {

struct CommonOptions {
    std::string config_path;  // empty: built-in defaults
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> out_dir_override;
    std::optional<std::uint64_t> threads_override;  // --threads, else HELSTROM_FLOW_THREADS
};

int cmd_dephasing_scan(const CommonOptions& opts);
int cmd_dephasing_surface(const CommonOptions& opts);
int cmd_cnot(const CommonOptions& opts);
int cmd_verify_bounds(const CommonOptions& opts);

} // namespace hfcli
