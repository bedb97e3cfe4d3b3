// dephasing.hpp — spin-boson pure dephasing: a qubit coupled to a single
// bosonic mode through H = ε σ³⊗I + ω I⊗b†b + g σ³⊗(b + b†), with initial
// states α|1⟩⊗|0⟩ + β|0⟩⊗|Ω_λ⟩ interpolating between factorized (λ=0) and
// entangled. Provides the analytic reduced dynamics, a truncated-Fock
// brute-force oracle, and the Monte Carlo correlation-detection scan.

#pragma once

#include "helstromflow/states.hpp"

#include <cstdint>
#include <vector>

namespace hflow {

// Qubit convention: σ³|j⟩ = (-1)^{j+1}|j⟩, so |1⟩ (basis index 1) is the
// excited state. Units: ħ = 1, times in 1/ω.
struct DephasingConfig {
    double epsilon = 1.0;  // system level spacing
    double omega = 1.0;    // mode frequency, > 0
    double g = 0.1;        // coupling
    Complex y = 1.0;       // coherent amplitude in |Ω_λ⟩
    double lambda = 0.0;   // correlation parameter, in [0, 1]
    Complex alpha = 0.70710678118654752440;
    Complex beta = 0.70710678118654752440;

    void validate() const;  // throws std::invalid_argument
};

enum class AmplitudeMode {
    haar,  // |α|² uniform in [0,1], relative phase uniform, global phase fixed (α real ≥ 0)
    real,  // α uniform in [0,1], β = sqrt(1 - α²)
};

struct ScanConfig {
    std::vector<double> p1_grid;
    std::vector<double> lambda_grid;
    std::size_t samples = 500;
    double dt = 0.15;
    double t_max = 6.283185307179586;
    std::uint64_t seed = 0;
    AmplitudeMode amplitude_mode = AmplitudeMode::haar;
    double detection_tol = 1e-9;

    void validate() const;
};

struct DetectionRecord {
    double p1 = 0.0;
    double lambda = 0.0;
    std::uint64_t detections = 0;
    std::uint64_t samples = 0;
    double frequency = 0.0;  // detections / samples
};

// C_λ = sqrt((1-λ)² + λ² + 2λ(1-λ) Re⟨0|y⟩), with ⟨0|y⟩ = exp(-|y|²/2).
double normalization_C(double lambda, Complex y);

struct OscillatingParams {
    double R;       // 4 (g/ω)² (1 - cos ωt)
    double Lambda;  // (g/ω) sin ωt
    double S;       // 2 (g/ω) (1 - cos ωt) - 1/2
};
OscillatingParams oscillating_params(double t, double g, double omega);

// Decoherence function for the y = 1 coherent superposition:
//   B_λ(t) = C_λ⁻¹ e^{-2iεt} e^{-R(t)} [1 - λ + λ e^{-2iΛ(t) + S(t)}]
Complex coherence_B(double lambda, double t, const DephasingConfig& cfg);

// ρ_S^λ(t): populations (|α|², |β|²) fixed by the dephasing structure,
// coherence ⟨1|ρ|0⟩ = αβ* B_λ(t).
DensityOperator reduced_state(const DephasingConfig& cfg, double t);

// Δ(t) = p1 ρ_S^λ(t) - (1-p1) ρ_S^0(t), assembled entrywise from the closed
// form. ε, ω, g, y come from cfg; λ, α, β are the explicit arguments.
ComplexMatrix helstrom_dephasing(double p1, double lambda, Complex alpha, Complex beta,
                                 double t, const DephasingConfig& cfg);

// |Ψ_λ⟩ = α|1⟩⊗|0⟩ + β|0⟩⊗|Ω_λ⟩ with |Ω_λ⟩ ∝ (1-λ)|0⟩ + λ|y⟩, renormalized
// on the truncated 2⊗nmax space and returned as the projector.
BipartiteState initial_global_state(const DephasingConfig& cfg, std::size_t nmax);

// Full-Hamiltonian evolution on the truncated Fock space followed by Tr_E.
// Independent cross-check for reduced_state; rejects nmax whose coherent
// truncation deficit exceeds 1e-12.
DensityOperator brute_force_reduced_state(const DephasingConfig& cfg, double t, std::size_t nmax);

// {k·dt : k ≥ 0, k·dt ≤ t_max (+1e-9 slack)}
std::vector<double> time_grid(double dt, double t_max);

// Backflow detection frequency of the ‖Δ(t)‖₁ trajectory per (p1, λ) grid
// cell over `samples` amplitude draws. Sample k of cell (i, j) draws from the
// substream mix_seed({seed, i, j, k}), so the result is identical under any
// parallel schedule.
std::vector<DetectionRecord> scan_detection(const ScanConfig& scan,
                                            const DephasingConfig& cfg_base,
                                            std::size_t threads = 1);

// ‖Δ(t)‖₁ over an (α, t) grid with real amplitudes, β = sqrt(1 - α²).
struct SurfaceGrid {
    std::vector<double> alphas;
    std::vector<double> times;
    std::vector<double> values;  // row-major: values[ia * times.size() + it]

    double value(std::size_t ia, std::size_t it) const { return values[ia * times.size() + it]; }
};
SurfaceGrid surface_trajectories(double p1, double lambda,
                                 const std::vector<double>& alpha_grid,
                                 const std::vector<double>& times,
                                 const DephasingConfig& cfg_base);

} // namespace hflow
