#include "helstromflow/random_states.hpp"

#include "helstromflow/eig.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hflow {

namespace {

std::uint64_t splitmix64_output(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_output(state_);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 pulled into (0, 1] to keep the log finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::normal_complex() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im);
}

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x6A09E667F3BCC909ULL;  // arbitrary fixed offset
    for (std::uint64_t part : parts) {
        h = splitmix64_output(h + 0x9E3779B97F4A7C15ULL + part);
    }
    return h;
}

ComplexMatrix random_density_matrix(Rng& rng, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("random_density_matrix: dim must be >= 1");
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            g(i, j) = rng.normal_complex();
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho *= Complex{1.0 / tr};
    // enforce exact Hermiticity of the product against rounding
    for (std::size_t i = 0; i < dim; ++i) {
        rho(i, i) = Complex(rho(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex v = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = v;
            rho(j, i) = std::conj(v);
        }
    }
    return rho;
}

DensityOperator random_density_operator(Rng& rng, std::size_t dim) {
    return DensityOperator(random_density_matrix(rng, dim));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("random_unitary: dim must be >= 1");
    ComplexMatrix u(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            u(i, j) = rng.normal_complex();
        }
    }
    // modified Gram-Schmidt on columns, two passes
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t prev = 0; prev < k; ++prev) {
                Complex overlap = 0.0;
                for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(u(r, prev)) * u(r, k);
                for (std::size_t r = 0; r < dim; ++r) u(r, k) -= overlap * u(r, prev);
            }
            double norm = 0.0;
            for (std::size_t r = 0; r < dim; ++r) norm += std::norm(u(r, k));
            norm = std::sqrt(norm);
            if (norm < 1e-12) {
                throw NumericalError("random_unitary: degenerate Gaussian draw");
            }
            for (std::size_t r = 0; r < dim; ++r) u(r, k) /= norm;
        }
    }
    return u;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("random_hermitian: dim must be >= 1");
    ComplexMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex z = 0.5 * rng.normal_complex();
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

} // namespace hflow
