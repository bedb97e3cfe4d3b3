#include "helstromflow/dephasing.hpp"

#include "helstromflow/eig.hpp"
#include "helstromflow/random_states.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <utility>

namespace hflow {

namespace {

void normalize(std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    const double n = std::sqrt(s);
    if (!(n > 0.0)) throw std::invalid_argument("normalize: zero vector");
    for (auto& z : v) z /= n;
}

// σ³|j⟩ = (-1)^{j+1}|j⟩: the ground state |0⟩ carries eigenvalue -1
ComplexMatrix sigma3() {
    ComplexMatrix s(2);
    s(0, 0) = -1.0;
    s(1, 1) = 1.0;
    return s;
}

// α|1⟩⊗|0⟩ + β|0⟩⊗|Ω_λ⟩ on the truncated space, unit norm
std::vector<Complex> initial_global_vector(const DephasingConfig& cfg, std::size_t nmax) {
    const auto coh = coherent_state(cfg.y, nmax);
    std::vector<Complex> omega_vec(nmax);
    omega_vec[0] = 1.0 - cfg.lambda;
    for (std::size_t n = 0; n < nmax; ++n) {
        omega_vec[n] += cfg.lambda * coh.amplitudes[n];
    }
    normalize(omega_vec);

    std::vector<Complex> psi(2 * nmax);
    psi[nmax] = cfg.alpha;  // |1⟩⊗|0⟩_E at composite index 1*nmax + 0
    for (std::size_t n = 0; n < nmax; ++n) {
        psi[n] = cfg.beta * omega_vec[n];
    }
    normalize(psi);
    return psi;
}

std::pair<Complex, Complex> draw_amplitudes(Rng& rng, AmplitudeMode mode) {
    if (mode == AmplitudeMode::real) {
        const double a = rng.uniform();
        return {Complex{a}, Complex{std::sqrt(std::max(0.0, 1.0 - a * a))}};
    }
    const double u = rng.uniform();                          // |α|²
    const double phi = 2.0 * std::numbers::pi * rng.uniform();  // relative phase on β
    return {Complex{std::sqrt(u)}, std::polar(std::sqrt(1.0 - u), phi)};
}

} // namespace

void DephasingConfig::validate() const {
    if (!(omega > 0.0)) throw std::invalid_argument("DephasingConfig: omega must be > 0");
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("DephasingConfig: lambda must lie in [0, 1]");
    }
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
        throw std::invalid_argument("DephasingConfig: |alpha|^2 + |beta|^2 must equal 1");
    }
    if (!std::isfinite(epsilon) || !std::isfinite(g) || !std::isfinite(std::abs(y))) {
        throw std::invalid_argument("DephasingConfig: non-finite parameter");
    }
}

void ScanConfig::validate() const {
    if (p1_grid.empty() || lambda_grid.empty()) {
        throw std::invalid_argument("ScanConfig: grids must be nonempty");
    }
    for (double p : p1_grid) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ScanConfig: p1 out of [0, 1]");
    }
    for (double l : lambda_grid) {
        if (!(l >= 0.0 && l <= 1.0)) throw std::invalid_argument("ScanConfig: lambda out of [0, 1]");
    }
    if (samples == 0) throw std::invalid_argument("ScanConfig: samples must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("ScanConfig: dt must be > 0");
    if (!(t_max >= dt)) throw std::invalid_argument("ScanConfig: t_max must be >= dt");
    if (!(detection_tol >= 0.0)) throw std::invalid_argument("ScanConfig: detection_tol must be >= 0");
}

double normalization_C(double lambda, Complex y) {
    const double overlap = std::exp(-0.5 * std::norm(y));  // Re⟨0|y⟩
    const double one_m = 1.0 - lambda;
    return std::sqrt(one_m * one_m + lambda * lambda + 2.0 * lambda * one_m * overlap);
}

OscillatingParams oscillating_params(double t, double g, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("oscillating_params: omega must be > 0");
    const double kappa = g / omega;
    const double one_minus_cos = 1.0 - std::cos(omega * t);
    return OscillatingParams{
        4.0 * kappa * kappa * one_minus_cos,
        kappa * std::sin(omega * t),
        2.0 * kappa * one_minus_cos - 0.5,
    };
}

Complex coherence_B(double lambda, double t, const DephasingConfig& cfg) {
    const auto osc = oscillating_params(t, cfg.g, cfg.omega);
    const Complex inner = (1.0 - lambda)
        + lambda * std::exp(Complex(osc.S, -2.0 * osc.Lambda));
    return std::polar(std::exp(-osc.R), -2.0 * cfg.epsilon * t) * inner
        / normalization_C(lambda, cfg.y);
}

DensityOperator reduced_state(const DephasingConfig& cfg, double t) {
    cfg.validate();
    const Complex coh = cfg.alpha * std::conj(cfg.beta) * coherence_B(cfg.lambda, t, cfg);
    ComplexMatrix m(2);
    m(0, 0) = std::norm(cfg.beta);
    m(1, 1) = std::norm(cfg.alpha);
    m(1, 0) = coh;  // ⟨1|ρ|0⟩
    m(0, 1) = std::conj(coh);
    return DensityOperator(std::move(m));
}

ComplexMatrix helstrom_dephasing(double p1, double lambda, Complex alpha, Complex beta,
                                 double t, const DephasingConfig& cfg) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw std::invalid_argument("helstrom_dephasing: p1 must lie in [0, 1]");
    }
    const double p2 = 1.0 - p1;
    const Complex off = alpha * std::conj(beta)
        * (p1 * coherence_B(lambda, t, cfg) - p2 * coherence_B(0.0, t, cfg));
    ComplexMatrix m(2);
    m(0, 0) = (p1 - p2) * std::norm(beta);
    m(1, 1) = (p1 - p2) * std::norm(alpha);
    m(1, 0) = off;
    m(0, 1) = std::conj(off);
    return m;
}

BipartiteState initial_global_state(const DephasingConfig& cfg, std::size_t nmax) {
    cfg.validate();
    if (nmax < 2) throw std::invalid_argument("initial_global_state: nmax must be >= 2");
    const auto psi = initial_global_vector(cfg, nmax);
    return BipartiteState(DensityOperator(ComplexMatrix::projector(psi)), 2, nmax);
}

DensityOperator brute_force_reduced_state(const DephasingConfig& cfg, double t, std::size_t nmax) {
    cfg.validate();
    if (nmax < 2) throw std::invalid_argument("brute_force_reduced_state: nmax must be >= 2");
    const double deficit = coherent_state(cfg.y, nmax).truncation_deficit;
    if (deficit > 1e-12) {
        throw std::invalid_argument(
            "brute_force_reduced_state: coherent truncation deficit above 1e-12; increase nmax");
    }

    const auto i2 = ComplexMatrix::identity(2);
    const auto ie = ComplexMatrix::identity(nmax);
    const auto b = fock_lowering(nmax);
    ComplexMatrix hamiltonian = Complex{cfg.epsilon} * kron(sigma3(), ie);
    hamiltonian += Complex{cfg.omega} * kron(i2, fock_number(nmax));
    hamiltonian += Complex{cfg.g} * kron(sigma3(), b + b.adjoint());

    const auto u = hermitian_expm(hamiltonian, t);
    const auto rho0 = ComplexMatrix::projector(initial_global_vector(cfg, nmax));
    const auto rho_t = u * rho0 * u.adjoint();
    return DensityOperator(partial_trace_env(rho_t, 2, nmax));
}

std::vector<double> time_grid(double dt, double t_max) {
    if (!(dt > 0.0)) throw std::invalid_argument("time_grid: dt must be > 0");
    if (!(t_max >= dt)) throw std::invalid_argument("time_grid: t_max must be >= dt");
    const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
    std::vector<double> ts(n + 1);
    for (std::size_t k = 0; k <= n; ++k) ts[k] = static_cast<double>(k) * dt;
    return ts;
}

std::vector<DetectionRecord> scan_detection(const ScanConfig& scan,
                                            const DephasingConfig& cfg_base,
                                            std::size_t threads) {
    scan.validate();
    cfg_base.validate();
    const auto ts = time_grid(scan.dt, scan.t_max);
    const std::size_t n_p1 = scan.p1_grid.size();
    const std::size_t n_lambda = scan.lambda_grid.size();
    std::vector<DetectionRecord> records(n_p1 * n_lambda);

    auto run_cell = [&](std::size_t cell) {
        const std::size_t ip = cell / n_lambda;
        const std::size_t il = cell % n_lambda;
        const double p1 = scan.p1_grid[ip];
        const double p2 = 1.0 - p1;
        const double lambda = scan.lambda_grid[il];

        // B factors depend on (λ, t) only, not on the amplitude draw
        std::vector<Complex> b_lambda(ts.size()), b_zero(ts.size());
        for (std::size_t k = 0; k < ts.size(); ++k) {
            b_lambda[k] = coherence_B(lambda, ts[k], cfg_base);
            b_zero[k] = coherence_B(0.0, ts[k], cfg_base);
        }

        std::uint64_t detections = 0;
        for (std::size_t sample = 0; sample < scan.samples; ++sample) {
            Rng rng(mix_seed({scan.seed, ip, il, sample}));
            const auto [alpha, beta] = draw_amplitudes(rng, scan.amplitude_mode);
            const double a2 = std::norm(alpha);
            const double b2 = std::norm(beta);
            const Complex ab = alpha * std::conj(beta);

            double v0 = 0.0;
            bool detected = false;
            for (std::size_t k = 0; k < ts.size(); ++k) {
                const Complex off = ab * (p1 * b_lambda[k] - p2 * b_zero[k]);
                const double v = trace_norm_2x2((p1 - p2) * b2, (p1 - p2) * a2, off);
                if (k == 0) {
                    v0 = v;
                } else if (v - v0 > scan.detection_tol) {
                    detected = true;
                    break;
                }
            }
            detections += detected ? 1 : 0;
        }
        records[cell] = DetectionRecord{
            p1, lambda, detections, scan.samples,
            static_cast<double>(detections) / static_cast<double>(scan.samples)};
    };

    const std::size_t n_cells = records.size();
    if (threads <= 1 || n_cells <= 1) {
        for (std::size_t cell = 0; cell < n_cells; ++cell) run_cell(cell);
    } else {
        std::atomic<std::size_t> next{0};
        const std::size_t n_workers = std::min(threads, n_cells);
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t cell = next.fetch_add(1); cell < n_cells;
                     cell = next.fetch_add(1)) {
                    run_cell(cell);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

SurfaceGrid surface_trajectories(double p1, double lambda,
                                 const std::vector<double>& alpha_grid,
                                 const std::vector<double>& times,
                                 const DephasingConfig& cfg_base) {
    cfg_base.validate();
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw std::invalid_argument("surface_trajectories: p1 must lie in [0, 1]");
    }
    for (double a : alpha_grid) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw std::invalid_argument("surface_trajectories: alpha values must lie in [0, 1]");
        }
    }
    SurfaceGrid grid{alpha_grid, times, {}};
    grid.values.resize(alpha_grid.size() * times.size());
    for (std::size_t ia = 0; ia < alpha_grid.size(); ++ia) {
        const double a = alpha_grid[ia];
        const Complex alpha{a};
        const Complex beta{std::sqrt(std::max(0.0, 1.0 - a * a))};
        for (std::size_t it = 0; it < times.size(); ++it) {
            const auto delta = helstrom_dephasing(p1, lambda, alpha, beta, times[it], cfg_base);
            grid.values[ia * times.size() + it] = trace_norm(delta);
        }
    }
    return grid;
}

} // namespace hflow
