#include "helstromflow/states.hpp"

#include "helstromflow/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hflow {

DensityOperator::DensityOperator(ComplexMatrix matrix, double tol)
    : m_(std::move(matrix)), tol_(tol) {
    if (m_.empty()) throw std::invalid_argument("DensityOperator: empty matrix");
    if (!(tol_ > 0.0)) throw std::invalid_argument("DensityOperator: tol must be positive");
    if (!m_.all_finite()) throw std::invalid_argument("DensityOperator: non-finite entry");
    if (m_.hermiticity_defect() > tol_) {
        throw std::invalid_argument("DensityOperator: not Hermitian within tolerance");
    }
    if (std::abs(m_.trace() - Complex{1.0}) > tol_) {
        throw std::invalid_argument("DensityOperator: trace differs from 1 beyond tolerance");
    }
    const auto eig = hermitian_eig(m_, tol_);
    if (eig.eigenvalues.front() < -tol_) {
        throw std::invalid_argument("DensityOperator: negative eigenvalue beyond tolerance");
    }
}

WeightPair::WeightPair(double p1) : p1_(p1) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw std::invalid_argument("WeightPair: p1 must lie in [0, 1]");
    }
}

BipartiteState::BipartiteState(DensityOperator state, std::size_t dim_sys, std::size_t dim_env)
    : state_(std::move(state)), dim_sys_(dim_sys), dim_env_(dim_env) {
    if (dim_sys_ == 0 || dim_env_ == 0) {
        throw std::invalid_argument("BipartiteState: dimensions must be >= 1");
    }
    if (state_.dim() != dim_sys_ * dim_env_) {
        throw std::invalid_argument("BipartiteState: state dim does not equal dimS*dimE");
    }
}

ComplexMatrix BipartiteState::system_marginal() const {
    return partial_trace_env(state_.matrix(), dim_sys_, dim_env_);
}

ComplexMatrix BipartiteState::environment_marginal() const {
    return partial_trace_sys(state_.matrix(), dim_sys_, dim_env_);
}

ComplexMatrix partial_trace_env(const ComplexMatrix& x, std::size_t dim_sys, std::size_t dim_env) {
    if (x.dim() != dim_sys * dim_env) {
        throw std::invalid_argument("partial_trace_env: dimension mismatch");
    }
    ComplexMatrix out(dim_sys);
    for (std::size_t i = 0; i < dim_sys; ++i) {
        for (std::size_t j = 0; j < dim_sys; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < dim_env; ++k) {
                s += x(i * dim_env + k, j * dim_env + k);
            }
            out(i, j) = s;
        }
    }
    return out;
}

ComplexMatrix partial_trace_sys(const ComplexMatrix& x, std::size_t dim_sys, std::size_t dim_env) {
    if (x.dim() != dim_sys * dim_env) {
        throw std::invalid_argument("partial_trace_sys: dimension mismatch");
    }
    ComplexMatrix out(dim_env);
    for (std::size_t k = 0; k < dim_env; ++k) {
        for (std::size_t l = 0; l < dim_env; ++l) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < dim_sys; ++i) {
                s += x(i * dim_env + k, i * dim_env + l);
            }
            out(k, l) = s;
        }
    }
    return out;
}

double trace_distance(const DensityOperator& r1, const DensityOperator& r2) {
    if (r1.dim() != r2.dim()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    const double d = 0.5 * trace_norm(r1.matrix() - r2.matrix());
    return std::clamp(d, 0.0, 1.0);
}

ComplexMatrix helstrom(const DensityOperator& r1, const DensityOperator& r2, const WeightPair& w) {
    if (r1.dim() != r2.dim()) {
        throw std::invalid_argument("helstrom: dimension mismatch");
    }
    return Complex{w.p1()} * r1.matrix() - Complex{w.p2()} * r2.matrix();
}

CoherentState coherent_state(Complex y, std::size_t nmax) {
    if (nmax < 1) throw std::invalid_argument("coherent_state: nmax must be >= 1");
    std::vector<Complex> amp(nmax);
    // c_n = e^{-|y|²/2} yⁿ / sqrt(n!), built by recursion c_n = c_{n-1} y / sqrt(n)
    amp[0] = std::exp(-0.5 * std::norm(y));
    for (std::size_t n = 1; n < nmax; ++n) {
        amp[n] = amp[n - 1] * y / std::sqrt(static_cast<double>(n));
    }
    double kept = 0.0;
    for (const auto& c : amp) kept += std::norm(c);
    const double deficit = std::max(0.0, 1.0 - kept);
    const double norm = std::sqrt(kept);
    for (auto& c : amp) c /= norm;
    return CoherentState{std::move(amp), deficit};
}

ComplexMatrix fock_lowering(std::size_t nmax) {
    if (nmax < 1) throw std::invalid_argument("fock_lowering: nmax must be >= 1");
    ComplexMatrix b(nmax);
    for (std::size_t n = 1; n < nmax; ++n) {
        b(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return b;
}

ComplexMatrix fock_number(std::size_t nmax) {
    if (nmax < 1) throw std::invalid_argument("fock_number: nmax must be >= 1");
    ComplexMatrix n_op(nmax);
    for (std::size_t n = 0; n < nmax; ++n) {
        n_op(n, n) = static_cast<double>(n);
    }
    return n_op;
}

} // namespace hflow
