#include "helstromflow/correlation.hpp"

#include "helstromflow/eig.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hflow {

namespace {

constexpr double kUnitaryTol = 1e-9;

void check_unitary(const ComplexMatrix& u, std::size_t dim, const char* who) {
    if (u.dim() != dim) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    const auto residual = u * u.adjoint() - ComplexMatrix::identity(dim);
    if (residual.max_abs() > kUnitaryTol) {
        throw std::invalid_argument(std::string(who) + ": evolution operator is not unitary");
    }
}

} // namespace

DephasingMapSpec eigen_dephasing_spec(const DensityOperator& rho_s, double degeneracy_gap) {
    const auto eig = hermitian_eig(rho_s.matrix(), rho_s.tol());
    const std::size_t n = rho_s.dim();

    DephasingMapSpec spec;
    spec.projectors.reserve(n);
    spec.weights.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Complex> column(n);
        for (std::size_t r = 0; r < n; ++r) column[r] = eig.eigenvectors(r, k);
        spec.projectors.push_back(ComplexMatrix::projector(column));
        spec.weights.push_back(std::max(0.0, eig.eigenvalues[k]));
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (eig.eigenvalues[k] - eig.eigenvalues[k - 1] < degeneracy_gap) {
            spec.degenerate = true;  // eigenbasis not unique; downstream results carry this
            break;
        }
    }
    return spec;
}

LocalDephasingResult local_dephasing(const BipartiteState& s) {
    const double tol = s.state().tol();
    const auto spec = eigen_dephasing_spec(DensityOperator(s.system_marginal(), tol));

    const auto identity_env = ComplexMatrix::identity(s.dim_env());
    ComplexMatrix dephased(s.state().dim());
    for (const auto& projector : spec.projectors) {
        const auto lifted = kron(projector, identity_env);
        dephased += lifted * s.state().matrix() * lifted;
    }
    return LocalDephasingResult{
        BipartiteState(DensityOperator(std::move(dephased), tol), s.dim_sys(), s.dim_env()),
        spec.degenerate};
}

WitnessTrajectory correlation_witness(const BipartiteState& s, const WeightPair& w,
                                      const std::vector<TimedUnitary>& unitaries) {
    if (unitaries.empty()) {
        throw std::invalid_argument("correlation_witness: no evolution operators supplied");
    }
    const auto dephased = local_dephasing(s);
    const auto& rho = s.state().matrix();
    const auto& rho_ref = dephased.state.state().matrix();
    const Complex p1{w.p1()}, p2{w.p2()};
    const double initial_info = std::abs(w.p1() - w.p2());

    std::vector<double> times, rises;
    times.reserve(unitaries.size());
    rises.reserve(unitaries.size());
    for (const auto& [t, u] : unitaries) {
        check_unitary(u, s.state().dim(), "correlation_witness");
        const auto u_dag = u.adjoint();
        const auto m1 = partial_trace_env(u * rho * u_dag, s.dim_sys(), s.dim_env());
        const auto m2 = partial_trace_env(u * rho_ref * u_dag, s.dim_sys(), s.dim_env());
        times.push_back(t);
        rises.push_back(trace_norm(p1 * m1 - p2 * m2) - initial_info);
    }
    return WitnessTrajectory{Trajectory(std::move(times), std::move(rises)),
                             dephased.degenerate_basis};
}

double witness_bound(const BipartiteState& s, const WeightPair& w) {
    const auto dephased = local_dephasing(s);
    const double distance = trace_distance(s.state(), dephased.state.state());
    return 2.0 * std::min(w.p1(), w.p2()) * distance;
}

void CnotCase::validate() const {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
        throw std::invalid_argument("CnotCase: |alpha|^2 + |beta|^2 must equal 1");
    }
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw std::invalid_argument("CnotCase: p1 must lie in [0, 1]");
    }
}

ComplexMatrix cnot_unitary() {
    // |00⟩↔|01⟩, |10⟩ and |11⟩ fixed (composite index i = iS*2 + iE)
    ComplexMatrix u(4);
    u(1, 0) = 1.0;
    u(0, 1) = 1.0;
    u(2, 2) = 1.0;
    u(3, 3) = 1.0;
    return u;
}

BipartiteState cnot_entangled_state(Complex alpha, Complex beta) {
    const std::vector<Complex> psi{beta, 0.0, 0.0, alpha};  // β|00⟩ + α|11⟩
    return BipartiteState(DensityOperator(ComplexMatrix::projector(psi)), 2, 2);
}

BipartiteState cnot_classical_state(Complex alpha, Complex beta) {
    ComplexMatrix m(4);
    m(0, 0) = std::norm(beta);
    m(3, 3) = std::norm(alpha);
    return BipartiteState(DensityOperator(std::move(m)), 2, 2);
}

double cnot_internal_info(const CnotCase& c) {
    c.validate();
    const double p1 = c.p1;
    const double p2 = 1.0 - p1;
    if (p1 < 1.0 / 3.0) return std::abs(p1 - p2);
    const double population_gap = std::norm(c.alpha) - std::norm(c.beta);
    const double cross = std::abs(c.alpha) * std::abs(c.beta);
    return std::hypot((p1 - p2) * population_gap, 2.0 * p1 * cross);
}

double cnot_bound(const CnotCase& c) {
    c.validate();
    return 2.0 * std::min(c.p1, 1.0 - c.p1) * std::abs(c.alpha) * std::abs(c.beta);
}

double cnot_rise_numeric(const CnotCase& c) {
    c.validate();
    const auto u = cnot_unitary();
    const auto u_dag = u.adjoint();
    const auto rho = cnot_entangled_state(c.alpha, c.beta).state().matrix();
    const auto rho_ref = cnot_classical_state(c.alpha, c.beta).state().matrix();
    const auto m1 = partial_trace_env(u * rho * u_dag, 2, 2);
    const auto m2 = partial_trace_env(u * rho_ref * u_dag, 2, 2);
    const double p1 = c.p1;
    const double p2 = 1.0 - p1;
    return trace_norm(Complex{p1} * m1 - Complex{p2} * m2) - std::abs(p1 - p2);
}

} // namespace hflow
