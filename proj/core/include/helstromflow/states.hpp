// states.hpp — validated quantum states, discrimination primitives, partial
// traces, and Fock-space builders

#pragma once

#include "helstromflow/complex_matrix.hpp"

#include <cstddef>
#include <vector>

namespace hflow {

// Quantum state: Hermitian, unit trace, positive semidefinite, each within
// the validation tolerance (absolute on entries / trace / lowest eigenvalue).
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix matrix, double tol = 1e-9);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }
    double tol() const noexcept { return tol_; }

private:
    ComplexMatrix m_;
    double tol_;
};

// Discrimination prior (p1, p2). p2 is derived as 1 - p1, never stored, so
// p1 + p2 == 1 holds exactly.
class WeightPair {
public:
    explicit WeightPair(double p1);
    double p1() const noexcept { return p1_; }
    double p2() const noexcept { return 1.0 - p1_; }

private:
    double p1_;
};

// State on a system ⊗ environment space with an explicit dimension split.
// Composite basis index: i = iS*dimE + iE (system slow).
class BipartiteState {
public:
    BipartiteState(DensityOperator state, std::size_t dim_sys, std::size_t dim_env);

    const DensityOperator& state() const noexcept { return state_; }
    std::size_t dim_sys() const noexcept { return dim_sys_; }
    std::size_t dim_env() const noexcept { return dim_env_; }

    ComplexMatrix system_marginal() const;       // Tr_E
    ComplexMatrix environment_marginal() const;  // Tr_S

private:
    DensityOperator state_;
    std::size_t dim_sys_;
    std::size_t dim_env_;
};

// Tr_E: result(i, j) = Σ_k x(i*dimE + k, j*dimE + k)
ComplexMatrix partial_trace_env(const ComplexMatrix& x, std::size_t dim_sys, std::size_t dim_env);
// Tr_S: result(k, l) = Σ_i x(i*dimE + k, i*dimE + l)
ComplexMatrix partial_trace_sys(const ComplexMatrix& x, std::size_t dim_sys, std::size_t dim_env);

// D(ρ¹, ρ²) = ½||ρ¹ - ρ²||₁ ∈ [0, 1]
double trace_distance(const DensityOperator& r1, const DensityOperator& r2);

// Helstrom matrix Δ = p1 ρ¹ - p2 ρ². Hermitian with trace p1 - p2; its trace
// norm is the optimal single-shot discrimination bias for the prior w.
ComplexMatrix helstrom(const DensityOperator& r1, const DensityOperator& r2, const WeightPair& w);

// Coherent state |y> truncated to the first nmax Fock levels and renormalized
// to unit norm. truncation_deficit is the weight 1 - Σ|c_n|² lost to the cut
// before renormalization.
struct CoherentState {
    std::vector<Complex> amplitudes;
    double truncation_deficit;
};
CoherentState coherent_state(Complex y, std::size_t nmax);

ComplexMatrix fock_lowering(std::size_t nmax);  // b
ComplexMatrix fock_number(std::size_t nmax);    // b†b

} // namespace hflow
