// info_flow.hpp — total/internal/external information for weighted state
// discrimination, the bounds on their flow, and backflow witnesses on
// sampled trajectories

#pragma once

#include "helstromflow/states.hpp"

#include <optional>
#include <vector>

namespace hflow {

// Real scalar sampled on a strictly increasing time grid.
class Trajectory {
public:
    Trajectory(std::vector<double> times, std::vector<double> values);

    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return times_.size(); }

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

struct InfoBreakdown {
    double total;
    double internal;
    double external;  // total - internal; nonnegative up to numerical noise
};

// ||p1 ρ_S¹ - p2 ρ_S²||₁: the information accessible through measurements on
// the system alone.
double internal_information(const DensityOperator& rs1, const DensityOperator& rs2,
                            const WeightPair& w);

// Splits the global Helstrom norm into internal (system marginals) and
// external (the remainder) parts. Throws NumericalError if the external part
// comes out below -1e-12, which the contraction property rules out.
InfoBreakdown information_breakdown(const BipartiteState& s1, const BipartiteState& s2,
                                    const WeightPair& w);

// Upper bound on the external information:
//   2 p1 D(ρ_SE¹, ρ_S¹⊗ρ_E¹) + 2 p2 D(ρ_SE², ρ_S²⊗ρ_E²)
//     + 2 min(p1, p2) D(ρ_E¹, ρ_E²).
// Nonzero only if the global states carry correlations or the environment
// marginals differ.
double external_info_bound(const BipartiteState& s1, const BipartiteState& s2,
                           const WeightPair& w);

// The same right-hand side evaluated on the initial states: bounds
// I_int(t) - I_int(0) for any joint unitary evolution.
double increase_bound(const BipartiteState& s1, const BipartiteState& s2,
                      const WeightPair& w);

struct BackflowReport {
    bool detected;
    double max_rise;                     // max_t of v(t) - v(0), clipped at 0
    std::optional<double> witness_time;  // first grid time with a rise above tol
};

// Flags any rise of the sampled values above the initial value by more than
// tol. witness_time reports the first grid point, never an interpolation.
BackflowReport detect_backflow(const Trajectory& traj, double tol = 1e-9);

// True iff the values never rise by more than tol between consecutive grid
// points. Assessed on the sampled grid only; a true verdict is "consistent
// with Markovian" for this weight and state pair, not a certification.
bool markovianity_witness(const Trajectory& traj, double tol = 1e-9);

} // namespace hflow
