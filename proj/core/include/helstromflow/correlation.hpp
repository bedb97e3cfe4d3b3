// correlation.hpp — local detection of quantum correlations: the dephasing
// map Φ_d over the system marginal's eigenbasis, zero-discord reference
// states, the Helstrom witness with its bound, and the two-qubit CNOT example

#pragma once

#include "helstromflow/info_flow.hpp"
#include "helstromflow/states.hpp"

#include <vector>

namespace hflow {

struct DephasingMapSpec {
    std::vector<ComplexMatrix> projectors;  // rank-one, pairwise orthogonal, sum to I
    std::vector<double> weights;            // q_j ≥ 0, Σ q_j = 1
    bool degenerate = false;                // basis not unique below the gap threshold
};

// Eigenprojectors and eigenvalues of ρ_S. A spectral gap below
// degeneracy_gap keeps the eigensolver's basis and sets the degenerate flag.
DephasingMapSpec eigen_dephasing_spec(const DensityOperator& rho_s,
                                      double degeneracy_gap = 1e-9);

struct LocalDephasingResult {
    BipartiteState state;
    bool degenerate_basis;
};

// ρ'_SE = Σ_j (Π_j ⊗ I) ρ_SE (Π_j ⊗ I): erases quantum correlations while
// preserving the system marginal. Zero-discord states are fixed points.
LocalDephasingResult local_dephasing(const BipartiteState& s);

struct TimedUnitary {
    double t;
    ComplexMatrix u;
};

struct WitnessTrajectory {
    Trajectory rises;  // I_int(t) - I_int(0), with I_int(0) = |p1 - p2|
    bool degenerate_basis;
};

// Internal-information rise between U ρ_SE U† and U ρ'_SE U† for each
// supplied unitary. Any value above tolerance witnesses quantum correlations
// (discord) in ρ_SE. Non-unitary inputs are rejected.
WitnessTrajectory correlation_witness(const BipartiteState& s, const WeightPair& w,
                                      const std::vector<TimedUnitary>& unitaries);

// 2 min(p1, p2) D(ρ_SE, ρ'_SE): caps every witness value for any evolution.
double witness_bound(const BipartiteState& s, const WeightPair& w);

// Two-qubit worked example: α|11⟩ + β|00⟩ against its classically
// correlated version, evolved through one CNOT.
struct CnotCase {
    Complex alpha;
    Complex beta;
    double p1;

    void validate() const;
};

// Control on the system qubit, flip on |0⟩:
// |11⟩→|11⟩, |10⟩→|10⟩, |01⟩→|00⟩, |00⟩→|01⟩. Self-inverse permutation.
ComplexMatrix cnot_unitary();

BipartiteState cnot_entangled_state(Complex alpha, Complex beta);  // (α|11⟩+β|00⟩) projector
BipartiteState cnot_classical_state(Complex alpha, Complex beta);  // |α|²|11⟩⟨11| + |β|²|00⟩⟨00|

// Closed-form evolved internal information:
//   |p1 - p2|                                     if p1 < 1/3
//   sqrt((p1-p2)²(|α|²-|β|²)² + 4 p1² |αβ|²)      if p1 ≥ 1/3
double cnot_internal_info(const CnotCase& c);

// 2 min(p1, p2) |αβ|
double cnot_bound(const CnotCase& c);

// Numeric route: evolve both family states through the gate, trace out the
// environment qubit, take the Helstrom norm; returns the rise over |p1 - p2|.
double cnot_rise_numeric(const CnotCase& c);

} // namespace hflow
