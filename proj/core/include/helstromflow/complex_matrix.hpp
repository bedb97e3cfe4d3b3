// complex_matrix.hpp — dense square complex matrices with row-major storage

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hflow {

using Complex = std::complex<double>;

// Dense square complex matrix. Entry (i, j) lives at data()[i*dim() + j]
// (row-major). Bipartite spaces are indexed as i = iS*dimE + iE throughout
// the library (system index slow); every tensor and partial-trace operation
// relies on this convention.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);
    // |i><j| in an n-dimensional space
    static ComplexMatrix basis_op(std::size_t dim, std::size_t i, std::size_t j);
    // |v><v| for a (not necessarily normalized) vector
    static ComplexMatrix projector(const std::vector<Complex>& v);

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

    const std::vector<Complex>& data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    // max entry modulus of A - A†
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// Kronecker product under the system-slow convention:
// (a ⊗ b)(i*db + k, j*db + l) = a(i, j) * b(k, l)
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> operator*(const ComplexMatrix& m, const std::vector<Complex>& v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace hflow
