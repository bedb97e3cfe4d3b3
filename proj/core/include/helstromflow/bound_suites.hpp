// bound_suites.hpp — randomized certification of the information-flow
// inequalities and the balance equation over reproducible instance streams

#pragma once

#include "helstromflow/states.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace hflow {

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t instances = 1000;
    double margin_tol = 1e-10;
    std::size_t evolution_times = 20;     // time samples per instance (increase/balance)
    std::size_t unitaries_per_state = 5;  // witness suite
    std::size_t balance_instances = 300;
};

// Everything about an instance is derived from instance_seed; dims and the
// weight are recorded for reporting and replay sanity checks.
struct InstanceRef {
    std::uint64_t instance_seed = 0;
    std::size_t dim_sys = 0;
    std::size_t dim_env = 0;
    double p1 = 0.0;
};

// Margin convention: an instance violates its theorem iff margin < -margin_tol.
// Bound suites report (bound - observed value); the balance suite reports
// -(largest conservation defect).
struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t violations = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    InstanceRef worst_instance;
};

SuiteResult external_bound_suite(const SuiteConfig& cfg);  // I_ext ≤ correlation bound
SuiteResult increase_bound_suite(const SuiteConfig& cfg);  // I_int rise ≤ initial bound
SuiteResult witness_bound_suite(const SuiteConfig& cfg);   // witness ≤ 2 min(p) D(ρ, ρ')
SuiteResult balance_suite(const SuiteConfig& cfg);         // I_tot conservation

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg);

// Recompute one instance's margin from its seed (replay of reported cases).
// Valid suite names: "external_bound", "increase_bound", "witness_bound",
// "balance".
double replay_instance(const std::string& suite_name, std::uint64_t instance_seed,
                       const SuiteConfig& cfg);

} // namespace hflow
