#include "helstromflow/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hflow {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kConvergence = 1e-12;  // relative to max(1, ||h||_F)

double off_diagonal_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            s += std::norm(a(i, j));
        }
    }
    return std::sqrt(2.0 * s);
}

ComplexMatrix symmetrized(const ComplexMatrix& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(h(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

void check_hermitian(const ComplexMatrix& h, double tol, const char* who) {
    if (h.empty()) throw std::invalid_argument(std::string(who) + ": empty matrix");
    if (!h.all_finite()) throw std::invalid_argument(std::string(who) + ": non-finite entry");
    const double scale = std::max(1.0, h.max_abs());
    if (h.hermiticity_defect() > tol * scale) {
        throw std::invalid_argument(std::string(who) + ": input is not Hermitian within tolerance");
    }
}

// One Jacobi rotation zeroing a(p, q). Updates a <- U† a U and v <- v U,
// where U acts on the (p, q) plane as [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
// with e^{iφ} the phase of a(p, q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.dim();
    const Complex apq = a(p, q);
    const double m = std::abs(apq);
    const Complex phase = apq / m;
    const Complex phase_conj = std::conj(phase);

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * m);
    const double tsign = tau >= 0.0 ? 1.0 : -1.0;
    const double t = tsign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // columns: a(., p), a(., q)
    for (std::size_t r = 0; r < n; ++r) {
        const Complex arp = a(r, p), arq = a(r, q);
        a(r, p) = c * arp - s * phase_conj * arq;
        a(r, q) = s * arp + c * phase_conj * arq;
    }
    // rows: a(p, .), a(q, .)
    for (std::size_t cidx = 0; cidx < n; ++cidx) {
        const Complex apc = a(p, cidx), aqc = a(q, cidx);
        a(p, cidx) = c * apc - s * phase * aqc;
        a(q, cidx) = s * apc + c * phase * aqc;
    }
    // pivot entries are exact by construction
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    for (std::size_t r = 0; r < n; ++r) {
        const Complex vrp = v(r, p), vrq = v(r, q);
        v(r, p) = c * vrp - s * phase_conj * vrq;
        v(r, q) = s * vrp + c * phase_conj * vrq;
    }
}

} // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol) {
    check_hermitian(h, tol, "hermitian_eig");
    const std::size_t n = h.dim();

    ComplexMatrix a = symmetrized(h);
    ComplexMatrix v = ComplexMatrix::identity(n);

    if (n > 1) {
        const double threshold = kConvergence * std::max(1.0, a.frobenius_norm());
        const double skip = threshold / (4.0 * static_cast<double>(n));

        bool polishing = false;
        bool converged = false;
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            if (off_diagonal_norm(a) <= threshold) {
                if (polishing) {
                    converged = true;
                    break;
                }
                polishing = true;
            }
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    if (std::abs(a(p, q)) > skip) rotate(a, v, p, q);
                }
            }
        }
        if (!converged && off_diagonal_norm(a) > threshold) {
            throw NumericalError("hermitian_eig: Jacobi sweeps did not converge");
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

double trace_norm(const ComplexMatrix& h, double tol) {
    check_hermitian(h, tol, "trace_norm");
    const auto eig = hermitian_eig(h, tol);
    double s = 0.0;
    for (double lambda : eig.eigenvalues) s += std::abs(lambda);
    return s;
}

double trace_norm_2x2(double a, double d, Complex off) noexcept {
    // |η+| + |η-| with η± = ((a+d) ± sqrt((a-d)² + 4|off|²)) / 2
    return std::max(std::abs(a + d), std::hypot(a - d, 2.0 * std::abs(off)));
}

ComplexMatrix hermitian_expm(const ComplexMatrix& h, double t, double tol) {
    const auto eig = hermitian_eig(h, tol);
    const std::size_t n = h.dim();
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; ++k) {
        phases[k] = std::polar(1.0, -eig.eigenvalues[k] * t);
    }
    const auto& vmat = eig.eigenvectors;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += vmat(i, k) * phases[k] * std::conj(vmat(j, k));
            }
            out(i, j) = s;
        }
    }
    return out;
}

} // namespace hflow
