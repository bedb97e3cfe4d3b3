// eig.hpp — complex Hermitian eigensolver (cyclic Jacobi), trace norms,
// unitary exponentials

#pragma once

#include "helstromflow/complex_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace hflow {

// An iterative routine failed to converge or produced an inconsistent result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns; column k pairs with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
// The input is symmetrized as (h + h†)/2 first; inputs whose hermiticity
// defect exceeds tol * max(1, max|h_ij|) are rejected. Sweeps run until the
// off-diagonal Frobenius norm drops below 1e-12 * max(1, ||h||_F), followed by
// one polishing sweep, with a hard cap of 60 sweeps (NumericalError beyond).
EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol = 1e-9);

// Σ|λ_i| over the Hermitian spectrum. Non-Hermitian input is rejected.
double trace_norm(const ComplexMatrix& h, double tol = 1e-9);

// Closed-form trace norm of [[a, off], [conj(off), d]] with real a, d.
double trace_norm_2x2(double a, double d, Complex off) noexcept;

// U(t) = exp(-i h t) for Hermitian h, via the eigendecomposition.
ComplexMatrix hermitian_expm(const ComplexMatrix& h, double t, double tol = 1e-9);

} // namespace hflow
