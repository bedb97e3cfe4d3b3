#include "helstromflow/info_flow.hpp"

#include "helstromflow/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hflow {

namespace {

void check_matching_split(const BipartiteState& s1, const BipartiteState& s2, const char* who) {
    if (s1.dim_sys() != s2.dim_sys() || s1.dim_env() != s2.dim_env()) {
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    }
}

double half_trace_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * trace_norm(a - b);
}

} // namespace

Trajectory::Trajectory(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() != values_.size()) {
        throw std::invalid_argument("Trajectory: times and values length mismatch");
    }
    if (times_.empty()) throw std::invalid_argument("Trajectory: empty");
    for (std::size_t k = 0; k < times_.size(); ++k) {
        if (!std::isfinite(times_[k]) || !std::isfinite(values_[k])) {
            throw std::invalid_argument("Trajectory: non-finite sample");
        }
        if (k > 0 && !(times_[k] > times_[k - 1])) {
            throw std::invalid_argument("Trajectory: times must be strictly increasing");
        }
    }
}

double internal_information(const DensityOperator& rs1, const DensityOperator& rs2,
                            const WeightPair& w) {
    if (rs1.dim() != rs2.dim()) {
        throw std::invalid_argument("internal_information: dimension mismatch");
    }
    return trace_norm(Complex{w.p1()} * rs1.matrix() - Complex{w.p2()} * rs2.matrix());
}

InfoBreakdown information_breakdown(const BipartiteState& s1, const BipartiteState& s2,
                                    const WeightPair& w) {
    check_matching_split(s1, s2, "information_breakdown");
    const Complex p1{w.p1()}, p2{w.p2()};
    const double total = trace_norm(p1 * s1.state().matrix() - p2 * s2.state().matrix());
    const double internal = trace_norm(p1 * s1.system_marginal() - p2 * s2.system_marginal());
    const double external = total - internal;
    if (external < -1e-12) {
        throw NumericalError("information_breakdown: external information below -1e-12");
    }
    return InfoBreakdown{total, internal, external};
}

double external_info_bound(const BipartiteState& s1, const BipartiteState& s2,
                           const WeightPair& w) {
    check_matching_split(s1, s2, "external_info_bound");
    const auto ms1 = s1.system_marginal();
    const auto me1 = s1.environment_marginal();
    const auto ms2 = s2.system_marginal();
    const auto me2 = s2.environment_marginal();

    const double d1 = half_trace_norm_diff(s1.state().matrix(), kron(ms1, me1));
    const double d2 = half_trace_norm_diff(s2.state().matrix(), kron(ms2, me2));
    const double de = half_trace_norm_diff(me1, me2);
    return 2.0 * w.p1() * d1 + 2.0 * w.p2() * d2 + 2.0 * std::min(w.p1(), w.p2()) * de;
}

double increase_bound(const BipartiteState& s1, const BipartiteState& s2, const WeightPair& w) {
    // Same right-hand side, evaluated on the initial pair: for any joint
    // unitary, I_int(t) - I_int(0) never exceeds this value.
    return external_info_bound(s1, s2, w);
}

BackflowReport detect_backflow(const Trajectory& traj, double tol) {
    if (tol < 0.0) throw std::invalid_argument("detect_backflow: tol must be >= 0");
    const auto& v = traj.values();
    const double v0 = v.front();
    double max_rise = 0.0;
    std::optional<double> witness_time;
    for (std::size_t k = 1; k < v.size(); ++k) {
        const double rise = v[k] - v0;
        max_rise = std::max(max_rise, rise);
        if (!witness_time && rise > tol) {
            witness_time = traj.times()[k];
        }
    }
    return BackflowReport{witness_time.has_value(), max_rise, witness_time};
}

bool markovianity_witness(const Trajectory& traj, double tol) {
    if (tol < 0.0) throw std::invalid_argument("markovianity_witness: tol must be >= 0");
    const auto& v = traj.values();
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (v[k] - v[k - 1] > tol) return false;
    }
    return true;
}

} // namespace hflow
