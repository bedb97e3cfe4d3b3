#include "commands.hpp"

#include "config.hpp"

#include "helstromflow/bound_suites.hpp"
#include "helstromflow/correlation.hpp"
#include "helstromflow/dephasing.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace hfcli {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr std::uint64_t kDefaultSeed = 20240811;

Json model_defaults() {
    return Json{
        {"epsilon", 1.0}, {"omega", 1.0}, {"g", 0.1}, {"y_re", 1.0}, {"y_im", 0.0},
    };
}

Json common_defaults() {
    return Json{
        {"seed", kDefaultSeed},
        {"out_dir", "."},
        {"threads", std::uint64_t{0}},  // 0: hardware concurrency
    };
}

Json merged(Json a, const Json& b) {
    a.update(b);
    return a;
}

Json scan_defaults() {
    return merged(merged(model_defaults(), common_defaults()),
                  Json{
                      {"p1_count", std::uint64_t{40}},
                      {"p1_values", Json::array()},
                      {"lambda_count", std::uint64_t{30}},
                      {"lambda_values", Json::array()},
                      {"samples", std::uint64_t{500}},
                      {"dt", 0.15},
                      {"t_max", kTwoPi},
                      {"amplitude_mode", "haar"},
                      {"detection_tol", 1e-9},
                  });
}

Json surface_defaults() {
    return merged(merged(model_defaults(), common_defaults()),
                  Json{
                      {"p1_values", Json::array({0.5, 0.6})},
                      {"lambda_values", Json::array({0.3, 0.4, 0.5, 0.6, 0.7})},
                      {"alpha_count", std::uint64_t{41}},
                      {"alpha_values", Json::array()},
                      {"dt", 0.15},
                      {"t_max", kTwoPi},
                  });
}

Json cnot_defaults() {
    return merged(common_defaults(),
                  Json{
                      {"p1_count", std::uint64_t{48}},
                      {"p1_values", Json::array()},
                      {"p1_extra", Json::array({1.0 / 3.0, 0.5})},
                      {"alpha_count", std::uint64_t{49}},
                      {"alpha_values", Json::array()},
                      {"alpha_extra", Json::array({0.7071067811865476})},
                  });
}

Json verify_defaults() {
    return merged(common_defaults(),
                  Json{
                      {"instances", std::uint64_t{1000}},
                      {"balance_instances", std::uint64_t{300}},
                      {"evolution_times", std::uint64_t{20}},
                      {"unitaries_per_state", std::uint64_t{5}},
                      {"margin_tol", 1e-10},
                      {"replay_suite", ""},
                      {"replay_instance_seed", std::uint64_t{0}},
                  });
}

Json resolve_with_overrides(const Json& defaults, const CommonOptions& opts) {
    Json cfg = resolve(defaults, load_config_file(opts.config_path));
    if (opts.seed_override) cfg["seed"] = *opts.seed_override;
    if (opts.out_dir_override) cfg["out_dir"] = *opts.out_dir_override;
    if (opts.threads_override) cfg["threads"] = *opts.threads_override;
    return cfg;
}

std::size_t effective_threads(const Json& cfg) {
    const auto requested = cfg.at("threads").get<std::uint64_t>();
    if (requested > 0) return static_cast<std::size_t>(requested);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::filesystem::path prepare_out_dir(const Json& cfg) {
    const std::filesystem::path dir = cfg.at("out_dir").get<std::string>();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create out_dir: " + dir.string());
    return dir;
}

hflow::DephasingConfig model_from(const Json& cfg) {
    hflow::DephasingConfig model;
    model.epsilon = cfg.at("epsilon").get<double>();
    model.omega = cfg.at("omega").get<double>();
    model.g = cfg.at("g").get<double>();
    model.y = hflow::Complex(cfg.at("y_re").get<double>(), cfg.at("y_im").get<double>());
    return model;
}

hflow::AmplitudeMode amplitude_mode_from(const Json& cfg) {
    const auto mode = cfg.at("amplitude_mode").get<std::string>();
    if (mode == "haar") return hflow::AmplitudeMode::haar;
    if (mode == "real") return hflow::AmplitudeMode::real;
    throw ConfigError("amplitude_mode must be \"haar\" or \"real\"");
}

std::string surface_file_name(double p1, double lambda) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "surface_p1_%g_lambda_%g.csv", p1, lambda);
    return std::string(buf);
}

Json instance_json(const hflow::InstanceRef& ref) {
    return Json{
        {"instance_seed", ref.instance_seed},
        {"dim_sys", ref.dim_sys},
        {"dim_env", ref.dim_env},
        {"p1", ref.p1},
    };
}

hflow::SuiteConfig suite_config_from(const Json& cfg) {
    hflow::SuiteConfig suite;
    suite.seed = cfg.at("seed").get<std::uint64_t>();
    suite.instances = cfg.at("instances").get<std::uint64_t>();
    suite.balance_instances = cfg.at("balance_instances").get<std::uint64_t>();
    suite.evolution_times = cfg.at("evolution_times").get<std::uint64_t>();
    suite.unitaries_per_state = cfg.at("unitaries_per_state").get<std::uint64_t>();
    suite.margin_tol = cfg.at("margin_tol").get<double>();
    return suite;
}

} // namespace

int cmd_dephasing_scan(const CommonOptions& opts) {
    const Json cfg = resolve_with_overrides(scan_defaults(), opts);
    const std::string started = iso_timestamp_utc();
    const auto out_dir = prepare_out_dir(cfg);

    hflow::ScanConfig scan;
    scan.p1_grid = values_or_count(cfg, "p1_values", "p1_count", /*include_zero=*/false);
    scan.lambda_grid = values_or_count(cfg, "lambda_values", "lambda_count", /*include_zero=*/true);
    scan.samples = cfg.at("samples").get<std::uint64_t>();
    scan.dt = cfg.at("dt").get<double>();
    scan.t_max = cfg.at("t_max").get<double>();
    scan.seed = cfg.at("seed").get<std::uint64_t>();
    scan.amplitude_mode = amplitude_mode_from(cfg);
    scan.detection_tol = cfg.at("detection_tol").get<double>();

    const auto records = scan_detection(scan, model_from(cfg), effective_threads(cfg));

    std::ostringstream csv;
    csv << "p1,lambda,detections,samples,frequency\n";
    for (const auto& r : records) {
        csv << format_double(r.p1) << ',' << format_double(r.lambda) << ',' << r.detections << ','
            << r.samples << ',' << format_double(r.frequency) << '\n';
    }
    const auto csv_path = out_dir / "scan.csv";
    atomic_write(csv_path, csv.str());

    write_manifest(out_dir, ManifestInfo{"dephasing-scan", cfg, scan.seed, started,
                                         iso_timestamp_utc(), {csv_path.string()}});
    return 0;
}

int cmd_dephasing_surface(const CommonOptions& opts) {
    const Json cfg = resolve_with_overrides(surface_defaults(), opts);
    const std::string started = iso_timestamp_utc();
    const auto out_dir = prepare_out_dir(cfg);

    const auto p1_values = cfg.at("p1_values").get<std::vector<double>>();
    const auto lambda_values = cfg.at("lambda_values").get<std::vector<double>>();
    if (p1_values.empty() || lambda_values.empty()) {
        throw ConfigError("p1_values and lambda_values must be nonempty");
    }
    const auto alphas = values_or_count(cfg, "alpha_values", "alpha_count", /*include_zero=*/true);
    const auto times = hflow::time_grid(cfg.at("dt").get<double>(), cfg.at("t_max").get<double>());
    const auto model = model_from(cfg);

    std::vector<std::string> outputs;
    for (double p1 : p1_values) {
        for (double lambda : lambda_values) {
            const auto grid = surface_trajectories(p1, lambda, alphas, times, model);
            std::ostringstream csv;
            csv << "alpha,t,helstrom_norm\n";
            for (std::size_t ia = 0; ia < alphas.size(); ++ia) {
                for (std::size_t it = 0; it < times.size(); ++it) {
                    csv << format_double(alphas[ia]) << ',' << format_double(times[it]) << ','
                        << format_double(grid.value(ia, it)) << '\n';
                }
            }
            const auto path = out_dir / surface_file_name(p1, lambda);
            atomic_write(path, csv.str());
            outputs.push_back(path.string());
        }
    }

    write_manifest(out_dir, ManifestInfo{"dephasing-surface", cfg,
                                         cfg.at("seed").get<std::uint64_t>(), started,
                                         iso_timestamp_utc(), outputs});
    return 0;
}

int cmd_cnot(const CommonOptions& opts) {
    const Json cfg = resolve_with_overrides(cnot_defaults(), opts);
    const std::string started = iso_timestamp_utc();
    const auto out_dir = prepare_out_dir(cfg);

    const auto p1_grid = merged_grid(cfg, "p1_values", "p1_count", "p1_extra");
    const auto alpha_grid = merged_grid(cfg, "alpha_values", "alpha_count", "alpha_extra");

    std::ostringstream csv;
    csv << "alpha_abs,p1,rise,bound,closed_form_rise\n";
    for (double alpha : alpha_grid) {
        const hflow::Complex beta{std::sqrt(std::max(0.0, 1.0 - alpha * alpha))};
        for (double p1 : p1_grid) {
            const hflow::CnotCase c{hflow::Complex{alpha}, beta, p1};
            const double rise = cnot_rise_numeric(c);
            const double bound = cnot_bound(c);
            const double closed = cnot_internal_info(c) - std::abs(2.0 * p1 - 1.0);
            csv << format_double(alpha) << ',' << format_double(p1) << ',' << format_double(rise)
                << ',' << format_double(bound) << ',' << format_double(closed) << '\n';
        }
    }
    const auto csv_path = out_dir / "cnot.csv";
    atomic_write(csv_path, csv.str());

    write_manifest(out_dir, ManifestInfo{"cnot", cfg, cfg.at("seed").get<std::uint64_t>(), started,
                                         iso_timestamp_utc(), {csv_path.string()}});
    return 0;
}

int cmd_verify_bounds(const CommonOptions& opts) {
    const Json cfg = resolve_with_overrides(verify_defaults(), opts);
    const std::string started = iso_timestamp_utc();
    const auto out_dir = prepare_out_dir(cfg);
    const auto suite_cfg = suite_config_from(cfg);

    Json report;
    report["seed"] = suite_cfg.seed;
    std::vector<std::string> outputs;
    int exit_code = 0;

    const auto replay_suite = cfg.at("replay_suite").get<std::string>();
    if (!replay_suite.empty()) {
        const auto instance_seed = cfg.at("replay_instance_seed").get<std::uint64_t>();
        double margin = 0.0;
        try {
            margin = hflow::replay_instance(replay_suite, instance_seed, suite_cfg);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        report["replay"] = Json{{"suite", replay_suite},
                                {"instance_seed", instance_seed},
                                {"margin", margin}};
        if (margin < -suite_cfg.margin_tol) exit_code = 4;
        std::printf("replay %s instance %llu: margin = %s\n", replay_suite.c_str(),
                    static_cast<unsigned long long>(instance_seed),
                    format_double(margin).c_str());
    } else {
        const auto results = hflow::run_all_suites(suite_cfg);
        std::size_t total_violations = 0;
        Json suites = Json::array();
        for (const auto& r : results) {
            suites.push_back(Json{{"name", r.name},
                                  {"instances", r.instances},
                                  {"violations", r.violations},
                                  {"worst_margin", r.worst_margin},
                                  {"worst_instance", instance_json(r.worst_instance)}});
            total_violations += r.violations;
            std::printf("%-16s instances=%zu violations=%zu worst_margin=%s\n", r.name.c_str(),
                        r.instances, r.violations, format_double(r.worst_margin).c_str());
            if (r.violations > 0) {
                // serialize the worst instance as a ready-to-run replay config
                Json replay_cfg = cfg;
                replay_cfg["replay_suite"] = r.name;
                replay_cfg["replay_instance_seed"] = r.worst_instance.instance_seed;
                const auto replay_path = out_dir / ("replay_" + r.name + ".json");
                atomic_write(replay_path, replay_cfg.dump(2) + "\n");
                outputs.push_back(replay_path.string());
            }
        }
        report["suites"] = suites;
        report["violations"] = total_violations;
        if (total_violations > 0) exit_code = 4;
    }

    const auto report_path = out_dir / "verify.json";
    atomic_write(report_path, report.dump(2) + "\n");
    outputs.insert(outputs.begin(), report_path.string());

    write_manifest(out_dir, ManifestInfo{"verify-bounds", cfg, suite_cfg.seed, started,
                                         iso_timestamp_utc(), outputs});
    return exit_code;
}

} // namespace hfcli
