#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helstromflow/bound_suites.hpp"
#include "helstromflow/dephasing.hpp"
#include "helstromflow/eig.hpp"
#include "helstromflow/info_flow.hpp"
#include "helstromflow/random_states.hpp"

#include "support/test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace hflow;
using namespace hflow::testing;

namespace {

BipartiteState random_bipartite(Rng& rng, std::size_t ds, std::size_t de) {
    return BipartiteState(random_density_operator(rng, ds * de), ds, de);
}

} // namespace

TEST_CASE("Trajectory validation") {
    CHECK_THROWS_AS(Trajectory({0.0, 1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory({0.0, 1.0}, {1.0, std::nan("")}), std::invalid_argument);
    CHECK_NOTHROW(Trajectory({0.0, 0.5, 1.5}, {1.0, 0.5, 0.2}));
}

TEST_CASE("internal_information") {
    Rng rng(mix_seed({101}));

    SUBCASE("identical marginals leave the weight bias") {
        const auto rho = random_density_operator(rng, 3);
        CHECK(internal_information(rho, rho, WeightPair(0.7))
              == doctest::Approx(0.4).epsilon(1e-12));
    }

    SUBCASE("orthogonal pure states at equal weights") {
        const auto g = pure_state({1.0, 0.0});
        const auto e = pure_state({0.0, 1.0});
        CHECK(internal_information(g, e, WeightPair(0.5)) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("biased orthogonal discrimination") {
        // Helstrom spectrum {0.6, -0.4} sums to 1.0 in modulus
        const auto zero = pure_state({1.0, 0.0});
        const auto one = pure_state({0.0, 1.0});
        CHECK(internal_information(one, zero, WeightPair(0.6))
              == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("information_breakdown") {
    Rng rng(mix_seed({103}));

    SUBCASE("product states with a common environment carry no external information") {
        const auto rs1 = random_density_matrix(rng, 2);
        const auto rs2 = random_density_matrix(rng, 2);
        const auto re = random_density_matrix(rng, 3);
        const BipartiteState s1(DensityOperator(kron(rs1, re)), 2, 3);
        const BipartiteState s2(DensityOperator(kron(rs2, re)), 2, 3);
        const auto info = information_breakdown(s1, s2, WeightPair(0.37));
        CHECK(std::abs(info.external) < 1e-10);
        CHECK(info.total == doctest::Approx(info.internal).epsilon(1e-10));
    }

    SUBCASE("identical global states") {
        const auto s = random_bipartite(rng, 2, 2);
        const auto info = information_breakdown(s, s, WeightPair(0.8));
        CHECK(info.total == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(info.internal == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(std::abs(info.external) < 1e-12);
    }

    SUBCASE("Bell state against its dephased version") {
        const auto bell = bell_state();
        const auto dephased = DensityOperator(diagonal_part(bell.matrix()));
        const BipartiteState s1(bell, 2, 2);
        const BipartiteState s2(dephased, 2, 2);
        const auto info = information_breakdown(s1, s2, WeightPair(0.5));
        // hand expansion: ½(ρ - ρ') keeps only the two ±¼ coherences
        CHECK(info.total == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(info.internal) < 1e-10);
        CHECK(info.external == doctest::Approx(0.5).epsilon(1e-10));
    }

    SUBCASE("dimension mismatch rejected") {
        const auto s22 = random_bipartite(rng, 2, 2);
        const auto s23 = random_bipartite(rng, 2, 3);
        CHECK_THROWS_AS(information_breakdown(s22, s23, WeightPair(0.5)), std::invalid_argument);
    }
}

TEST_CASE("external_info_bound") {
    Rng rng(mix_seed({107}));

    SUBCASE("vanishes for uncorrelated states with equal environment marginals") {
        const auto rs1 = random_density_matrix(rng, 2);
        const auto rs2 = random_density_matrix(rng, 2);
        const auto re = random_density_matrix(rng, 2);
        const BipartiteState s1(DensityOperator(kron(rs1, re)), 2, 2);
        const BipartiteState s2(DensityOperator(kron(rs2, re)), 2, 2);
        CHECK(external_info_bound(s1, s2, WeightPair(0.3)) < 1e-10);
    }

    SUBCASE("unbiased weights reduce to the trace-distance bound") {
        const auto s1 = random_bipartite(rng, 2, 3);
        const auto s2 = random_bipartite(rng, 2, 3);
        const auto d = [](const ComplexMatrix& a, const ComplexMatrix& b) {
            return 0.5 * trace_norm(a - b);
        };
        const double expected =
            d(s1.state().matrix(), kron(s1.system_marginal(), s1.environment_marginal()))
            + d(s2.state().matrix(), kron(s2.system_marginal(), s2.environment_marginal()))
            + d(s1.environment_marginal(), s2.environment_marginal());
        CHECK(external_info_bound(s1, s2, WeightPair(0.5))
              == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("dominates the external information instance by instance") {
        for (int k = 0; k < 1000; ++k) {
            Rng inst(mix_seed({107, 2, static_cast<std::uint64_t>(k)}));
            const WeightPair w(inst.uniform());
            const auto s1 = random_bipartite(inst, 2, 2);
            const auto s2 = random_bipartite(inst, 2, 2);
            const double bound = external_info_bound(s1, s2, w);
            const double external = information_breakdown(s1, s2, w).external;
            CHECK(bound - external >= -1e-10);
        }
    }
}

TEST_CASE("increase_bound") {
    Rng rng(mix_seed({109}));

    SUBCASE("factorized initial states with a common environment") {
        const auto rs1 = random_density_matrix(rng, 2);
        const auto rs2 = random_density_matrix(rng, 2);
        const auto re = random_density_matrix(rng, 3);
        const BipartiteState s1(DensityOperator(kron(rs1, re)), 2, 3);
        const BipartiteState s2(DensityOperator(kron(rs2, re)), 2, 3);
        CHECK(increase_bound(s1, s2, WeightPair(0.44)) < 1e-10);
    }

    SUBCASE("identical product states") {
        const auto rs = random_density_matrix(rng, 2);
        const auto re = random_density_matrix(rng, 2);
        const BipartiteState s(DensityOperator(kron(rs, re)), 2, 2);
        CHECK(increase_bound(s, s, WeightPair(0.25)) < 1e-12);
    }

    SUBCASE("identical correlated states keep the correlation terms") {
        // both state terms survive: bound = 2 D(ρ_SE, ρ_S ⊗ ρ_E)
        const auto s = random_bipartite(rng, 2, 2);
        const double product_distance =
            0.5 * trace_norm(s.state().matrix()
                             - kron(s.system_marginal(), s.environment_marginal()));
        CHECK(increase_bound(s, s, WeightPair(0.25))
              == doctest::Approx(2.0 * product_distance).epsilon(1e-12));
    }

    SUBCASE("correlated dephasing-model pair") {
        DephasingConfig correlated;
        correlated.lambda = 0.5;
        DephasingConfig factorized;
        factorized.lambda = 0.0;
        const auto s1 = initial_global_state(correlated, 20);
        const auto s2 = initial_global_state(factorized, 20);
        CHECK(increase_bound(s1, s2, WeightPair(0.6)) > 1e-3);
    }
}

TEST_CASE("detect_backflow") {
    SUBCASE("monotone decreasing trajectory") {
        const Trajectory traj({0.0, 1.0, 2.0, 3.0}, {1.0, 0.8, 0.5, 0.3});
        const auto report = detect_backflow(traj, 1e-9);
        CHECK_FALSE(report.detected);
        CHECK(report.max_rise == 0.0);
        CHECK_FALSE(report.witness_time.has_value());
    }

    SUBCASE("constant trajectory") {
        const Trajectory traj({0.0, 1.0, 2.0}, {0.4, 0.4, 0.4});
        const auto report = detect_backflow(traj, 1e-9);
        CHECK_FALSE(report.detected);
        CHECK(report.max_rise == 0.0);
    }

    SUBCASE("reports the first grid time above tolerance") {
        const Trajectory traj({0.0, 1.0, 2.0, 3.0}, {0.4, 0.3, 0.45, 0.5});
        const auto report = detect_backflow(traj, 1e-9);
        CHECK(report.detected);
        CHECK(report.max_rise == doctest::Approx(0.1).epsilon(1e-14));
        CHECK(report.witness_time.value() == 2.0);
    }

    SUBCASE("correlated dephasing trajectory shows backflow") {
        DephasingConfig cfg;
        cfg.lambda = 0.2;
        const auto ts = time_grid(0.15, 2.0 * std::numbers::pi);
        std::vector<double> values;
        for (double t : ts) {
            values.push_back(trace_norm(
                helstrom_dephasing(0.5, cfg.lambda, cfg.alpha, cfg.beta, t, cfg)));
        }
        const auto report = detect_backflow(Trajectory(ts, values), 1e-9);
        CHECK(report.detected);
        CHECK(report.max_rise > 1e-3);
    }
}

TEST_CASE("markovianity_witness") {
    SUBCASE("contraction semigroup samples") {
        std::vector<double> ts, vs;
        for (int k = 0; k < 30; ++k) {
            ts.push_back(0.2 * k);
            vs.push_back(std::exp(-0.2 * k));
        }
        CHECK(markovianity_witness(Trajectory(ts, vs), 1e-9));
    }

    SUBCASE("a single rise above tolerance flags non-Markovianity") {
        const double tol = 1e-6;
        CHECK_FALSE(markovianity_witness(Trajectory({0.0, 1.0, 2.0}, {0.5, 0.4, 0.4 + 2.0 * tol}), tol));
    }

    SUBCASE("factorized dephasing trajectory verdict") {
        // λ = 0: both states coincide and ‖Δ(t)‖₁ is flat at |p1 - p2|
        DephasingConfig cfg;
        const auto ts = time_grid(0.15, 2.0 * std::numbers::pi);
        std::vector<double> values;
        for (double t : ts) {
            values.push_back(trace_norm(helstrom_dephasing(0.7, 0.0, cfg.alpha, cfg.beta, t, cfg)));
        }
        CHECK(markovianity_witness(Trajectory(ts, values), 1e-9));
        CHECK(values.front() == doctest::Approx(0.4).epsilon(1e-12));
    }
}

TEST_CASE("balance equation under joint unitaries") {
    for (int k = 0; k < 25; ++k) {
        Rng rng(mix_seed({113, static_cast<std::uint64_t>(k)}));
        const WeightPair w(rng.uniform());
        const auto s1 = random_bipartite(rng, 2, 3);
        const auto s2 = random_bipartite(rng, 2, 3);
        const auto h = random_hermitian(rng, 6);
        const auto info0 = information_breakdown(s1, s2, w);
        for (int j = 1; j <= 8; ++j) {
            const auto u = hermitian_expm(h, 0.4 * j);
            const auto u_dag = u.adjoint();
            const BipartiteState e1(
                DensityOperator(u * s1.state().matrix() * u_dag), 2, 3);
            const BipartiteState e2(
                DensityOperator(u * s2.state().matrix() * u_dag), 2, 3);
            const auto info_t = information_breakdown(e1, e2, w);
            CHECK(std::abs(info_t.total - info0.total) < 1e-10);
            CHECK(std::abs((info_t.internal + info_t.external) - info0.total) < 1e-10);
        }
    }
}

TEST_CASE("increase theorem over random unitary families") {
    SuiteConfig cfg;
    cfg.seed = 2024;
    cfg.instances = 200;
    cfg.evolution_times = 20;
    const auto result = increase_bound_suite(cfg);
    CHECK(result.instances == 200);
    CHECK(result.violations == 0);
    CHECK(result.worst_margin >= -1e-10);
}

TEST_CASE("data processing: factorized initial states never gain internal information") {
    for (int k = 0; k < 50; ++k) {
        Rng rng(mix_seed({127, static_cast<std::uint64_t>(k)}));
        const WeightPair w(rng.uniform());
        const auto rs1 = random_density_matrix(rng, 2);
        const auto rs2 = random_density_matrix(rng, 2);
        const auto re = random_density_matrix(rng, 2);
        const auto g1 = kron(rs1, re);
        const auto g2 = kron(rs2, re);
        const Complex p1{w.p1()}, p2{w.p2()};
        const double initial = trace_norm(p1 * rs1 - p2 * rs2);
        const auto h = random_hermitian(rng, 4);
        for (int j = 1; j <= 20; ++j) {
            const auto u = hermitian_expm(h, 0.3 * j);
            const auto u_dag = u.adjoint();
            const double evolved = trace_norm(p1 * partial_trace_env(u * g1 * u_dag, 2, 2)
                                              - p2 * partial_trace_env(u * g2 * u_dag, 2, 2));
            CHECK(evolved <= initial + 1e-10);
        }
    }
}

TEST_CASE("weight symmetry under simultaneous swap") {
    Rng rng(mix_seed({131}));
    for (int k = 0; k < 20; ++k) {
        const double p1 = rng.uniform();
        const auto r1 = random_density_operator(rng, 3);
        const auto r2 = random_density_operator(rng, 3);
        CHECK(internal_information(r1, r2, WeightPair(p1))
              == doctest::Approx(internal_information(r2, r1, WeightPair(1.0 - p1)))
                     .epsilon(1e-12));

        const auto s1 = random_bipartite(rng, 2, 2);
        const auto s2 = random_bipartite(rng, 2, 2);
        const auto fwd = information_breakdown(s1, s2, WeightPair(p1));
        const auto swapped = information_breakdown(s2, s1, WeightPair(1.0 - p1));
        CHECK(fwd.total == doctest::Approx(swapped.total).epsilon(1e-12));
        CHECK(fwd.internal == doctest::Approx(swapped.internal).epsilon(1e-12));
        CHECK(external_info_bound(s1, s2, WeightPair(p1))
              == doctest::Approx(external_info_bound(s2, s1, WeightPair(1.0 - p1)))
                     .epsilon(1e-12));
    }
}
