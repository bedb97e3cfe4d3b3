#include "helstromflow/bound_suites.hpp"

#include "helstromflow/correlation.hpp"
#include "helstromflow/eig.hpp"
#include "helstromflow/info_flow.hpp"
#include "helstromflow/random_states.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace hflow {

namespace {

constexpr std::uint64_t kExternalId = 1;
constexpr std::uint64_t kIncreaseId = 2;
constexpr std::uint64_t kWitnessId = 3;
constexpr std::uint64_t kBalanceId = 4;

constexpr double kTimeStride = 0.35;  // evolution sampling times t_k = k * stride

struct DimPair {
    std::size_t sys;
    std::size_t env;
};

constexpr DimPair kDims[] = {{2, 2}, {2, 3}, {3, 3}, {4, 4}};
constexpr DimPair kWitnessDims[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};

DimPair pick_dims(Rng& rng, const DimPair (&choices)[4]) {
    return choices[rng.next_u64() % 4];
}

BipartiteState random_bipartite(Rng& rng, DimPair d) {
    return BipartiteState(random_density_operator(rng, d.sys * d.env), d.sys, d.env);
}

// Eq.-level margin per instance; the whole instance is a function of its seed.

double external_margin(std::uint64_t instance_seed, const SuiteConfig&, InstanceRef& ref) {
    Rng rng(instance_seed);
    const DimPair d = pick_dims(rng, kDims);
    const WeightPair w(rng.uniform());
    const auto s1 = random_bipartite(rng, d);
    const auto s2 = random_bipartite(rng, d);
    ref = InstanceRef{instance_seed, d.sys, d.env, w.p1()};
    return external_info_bound(s1, s2, w) - information_breakdown(s1, s2, w).external;
}

double increase_margin(std::uint64_t instance_seed, const SuiteConfig& cfg, InstanceRef& ref) {
    Rng rng(instance_seed);
    const DimPair d = pick_dims(rng, kDims);
    const WeightPair w(rng.uniform());
    const auto s1 = random_bipartite(rng, d);
    const auto s2 = random_bipartite(rng, d);
    ref = InstanceRef{instance_seed, d.sys, d.env, w.p1()};

    const double bound = increase_bound(s1, s2, w);
    const Complex p1{w.p1()}, p2{w.p2()};
    const auto& g1 = s1.state().matrix();
    const auto& g2 = s2.state().matrix();
    const double initial = trace_norm(p1 * s1.system_marginal() - p2 * s2.system_marginal());

    const auto hamiltonian = random_hermitian(rng, d.sys * d.env);
    double max_rise = 0.0;
    for (std::size_t k = 1; k <= cfg.evolution_times; ++k) {
        const auto u = hermitian_expm(hamiltonian, kTimeStride * static_cast<double>(k));
        const auto u_dag = u.adjoint();
        const auto m1 = partial_trace_env(u * g1 * u_dag, d.sys, d.env);
        const auto m2 = partial_trace_env(u * g2 * u_dag, d.sys, d.env);
        max_rise = std::max(max_rise, trace_norm(p1 * m1 - p2 * m2) - initial);
    }
    return bound - max_rise;
}

double witness_margin(std::uint64_t instance_seed, const SuiteConfig& cfg, InstanceRef& ref) {
    Rng rng(instance_seed);
    const DimPair d = pick_dims(rng, kWitnessDims);
    const WeightPair w(rng.uniform());
    const auto s = random_bipartite(rng, d);
    ref = InstanceRef{instance_seed, d.sys, d.env, w.p1()};

    const double bound = witness_bound(s, w);
    std::vector<TimedUnitary> unitaries;
    unitaries.reserve(cfg.unitaries_per_state);
    for (std::size_t j = 0; j < cfg.unitaries_per_state; ++j) {
        unitaries.push_back({static_cast<double>(j + 1), random_unitary(rng, d.sys * d.env)});
    }
    const auto witness = correlation_witness(s, w, unitaries);
    double max_value = 0.0;
    for (double v : witness.rises.values()) max_value = std::max(max_value, v);
    return bound - max_value;
}

double balance_margin(std::uint64_t instance_seed, const SuiteConfig& cfg, InstanceRef& ref) {
    Rng rng(instance_seed);
    const DimPair d = pick_dims(rng, kDims);
    const WeightPair w(rng.uniform());
    const auto s1 = random_bipartite(rng, d);
    const auto s2 = random_bipartite(rng, d);
    ref = InstanceRef{instance_seed, d.sys, d.env, w.p1()};

    const Complex p1{w.p1()}, p2{w.p2()};
    const auto& g1 = s1.state().matrix();
    const auto& g2 = s2.state().matrix();
    const double total_initial = trace_norm(p1 * g1 - p2 * g2);

    const auto hamiltonian = random_hermitian(rng, d.sys * d.env);
    double worst_defect = 0.0;
    for (std::size_t k = 1; k <= cfg.evolution_times; ++k) {
        const auto u = hermitian_expm(hamiltonian, kTimeStride * static_cast<double>(k));
        const auto u_dag = u.adjoint();
        const double total_t = trace_norm(p1 * (u * g1 * u_dag) - p2 * (u * g2 * u_dag));
        worst_defect = std::max(worst_defect, std::abs(total_t - total_initial));
    }
    return -worst_defect;
}

using MarginFn = double (*)(std::uint64_t, const SuiteConfig&, InstanceRef&);

SuiteResult run_suite(const std::string& name, std::uint64_t suite_id, std::size_t instances,
                      const SuiteConfig& cfg, MarginFn margin_fn) {
    SuiteResult result;
    result.name = name;
    result.instances = instances;
    for (std::size_t k = 0; k < instances; ++k) {
        const std::uint64_t instance_seed = mix_seed({cfg.seed, suite_id, k});
        InstanceRef ref;
        const double margin = margin_fn(instance_seed, cfg, ref);
        if (margin < result.worst_margin) {
            result.worst_margin = margin;
            result.worst_instance = ref;
        }
        if (margin < -cfg.margin_tol) ++result.violations;
    }
    return result;
}

} // namespace

SuiteResult external_bound_suite(const SuiteConfig& cfg) {
    return run_suite("external_bound", kExternalId, cfg.instances, cfg, external_margin);
}

SuiteResult increase_bound_suite(const SuiteConfig& cfg) {
    return run_suite("increase_bound", kIncreaseId, cfg.instances, cfg, increase_margin);
}

SuiteResult witness_bound_suite(const SuiteConfig& cfg) {
    return run_suite("witness_bound", kWitnessId, cfg.instances, cfg, witness_margin);
}

SuiteResult balance_suite(const SuiteConfig& cfg) {
    return run_suite("balance", kBalanceId, cfg.balance_instances, cfg, balance_margin);
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg) {
    return {external_bound_suite(cfg), increase_bound_suite(cfg), witness_bound_suite(cfg),
            balance_suite(cfg)};
}

double replay_instance(const std::string& suite_name, std::uint64_t instance_seed,
                       const SuiteConfig& cfg) {
    InstanceRef ref;
    if (suite_name == "external_bound") return external_margin(instance_seed, cfg, ref);
    if (suite_name == "increase_bound") return increase_margin(instance_seed, cfg, ref);
    if (suite_name == "witness_bound") return witness_margin(instance_seed, cfg, ref);
    if (suite_name == "balance") return balance_margin(instance_seed, cfg, ref);
    throw std::invalid_argument("replay_instance: unknown suite '" + suite_name + "'");
}

} // namespace hflow
