#include "config.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace hfcli {

namespace {

bool is_number(const Json& v) { return v.is_number_integer() || v.is_number_unsigned() || v.is_number_float(); }

bool is_numeric_array(const Json& v) {
    if (!v.is_array()) return false;
    return std::all_of(v.begin(), v.end(), [](const Json& e) { return is_number(e); });
}

} // namespace

Json load_config_file(const std::string& path) {
    if (path.empty()) return Json::object();
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    Json parsed;
    try {
        in >> parsed;
    } catch (const Json::parse_error& e) {
        throw ConfigError("config is not valid JSON (" + path + "): " + e.what());
    }
    if (!parsed.is_object()) throw ConfigError("config root must be a JSON object: " + path);
    return parsed;
}

Json resolve(const Json& defaults, const Json& user) {
    Json out = defaults;
    for (const auto& [key, value] : user.items()) {
        if (!defaults.contains(key)) {
            throw ConfigError("unknown config key: \"" + key + "\"");
        }
        const Json& def = defaults.at(key);
        if (def.is_string()) {
            if (!value.is_string()) throw ConfigError("config key \"" + key + "\" must be a string");
            out[key] = value;
        } else if (def.is_array()) {
            if (!is_numeric_array(value)) {
                throw ConfigError("config key \"" + key + "\" must be an array of numbers");
            }
            out[key] = value;
        } else if (def.is_number_unsigned()) {
            const bool ok = value.is_number_unsigned()
                || (value.is_number_integer() && value.get<std::int64_t>() >= 0);
            if (!ok) {
                throw ConfigError("config key \"" + key + "\" must be a nonnegative integer");
            }
            out[key] = value.get<std::uint64_t>();
        } else if (def.is_number()) {
            if (!is_number(value)) throw ConfigError("config key \"" + key + "\" must be a number");
            out[key] = value.get<double>();
        } else {
            throw ConfigError("config key \"" + key + "\" has unsupported type");
        }
    }
    return out;
}

std::string config_digest(const Json& resolved) {
    const std::string canonical = resolved.dump();  // object keys are sorted
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x00000100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << contents;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string iso_timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return std::string(buf);
}

std::filesystem::path write_manifest(const std::filesystem::path& out_dir,
                                     const ManifestInfo& info) {
    Json manifest;
    manifest["command"] = info.command;
    manifest["config_digest"] = config_digest(info.resolved_config);
    manifest["seed"] = info.seed;
    manifest["tool_version"] = "0.1.0";
    manifest["started"] = info.started;
    manifest["finished"] = info.finished;
    manifest["output_paths"] = info.output_paths;
    manifest["resolved_config"] = info.resolved_config;
    const auto path = out_dir / "manifest.json";
    atomic_write(path, manifest.dump(2) + "\n");
    return path;
}

std::vector<double> values_or_count(const Json& cfg, const std::string& values_key,
                                    const std::string& count_key, bool include_zero) {
    const auto& explicit_values = cfg.at(values_key);
    if (!explicit_values.empty()) {
        return explicit_values.get<std::vector<double>>();
    }
    const auto count = cfg.at(count_key).get<std::uint64_t>();
    if (count < 2) throw ConfigError("config key \"" + count_key + "\" must be >= 2");
    std::vector<double> grid;
    grid.reserve(count);
    if (include_zero) {
        // count equally spaced values spanning [0, 1]
        for (std::uint64_t k = 0; k < count; ++k) {
            grid.push_back(static_cast<double>(k) / static_cast<double>(count - 1));
        }
    } else {
        // count equally spaced values k/count, k = 1..count (0 excluded)
        for (std::uint64_t k = 1; k <= count; ++k) {
            grid.push_back(static_cast<double>(k) / static_cast<double>(count));
        }
    }
    return grid;
}

std::vector<double> merged_grid(const Json& cfg, const std::string& values_key,
                                const std::string& count_key, const std::string& extra_key) {
    std::vector<double> grid = values_or_count(cfg, values_key, count_key, /*include_zero=*/true);
    for (double v : cfg.at(extra_key).get<std::vector<double>>()) {
        grid.push_back(v);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-15; }),
               grid.end());
    return grid;
}

} // namespace hfcli
