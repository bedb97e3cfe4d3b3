// config.hpp — flat JSON configs with strict keys, explicit defaults, stable
// digests, and atomic output files

#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfcli {

using Json = nlohmann::json;

// Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Empty path yields an empty object (pure defaults).
Json load_config_file(const std::string& path);

// Start from defaults, overlay user values. Unknown keys and type mismatches
// are rejected so no setting can silently miss its target.
Json resolve(const Json& defaults, const Json& user);

// FNV-1a 64-bit over the canonical (key-sorted) dump of the resolved config.
std::string config_digest(const Json& resolved);

std::string format_double(double v);  // 17 significant digits, locale-free

void atomic_write(const std::filesystem::path& path, const std::string& contents);

std::string iso_timestamp_utc();

struct ManifestInfo {
    std::string command;
    Json resolved_config;
    std::uint64_t seed = 0;
    std::string started;
    std::string finished;
    std::vector<std::string> output_paths;
};

// manifest.json next to the command outputs
std::filesystem::path write_manifest(const std::filesystem::path& out_dir, const ManifestInfo& info);

// Grid helpers shared by the commands.
std::vector<double> values_or_count(const Json& cfg, const std::string& values_key,
                                    const std::string& count_key, bool include_zero);
std::vector<double> merged_grid(const Json& cfg, const std::string& values_key,
                                const std::string& count_key, const std::string& extra_key);

} // namespace hfcli
