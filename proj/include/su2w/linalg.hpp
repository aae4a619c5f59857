// Copyright 2026 The su2wigner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SU2W_LINALG_HPP
#define SU2W_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "su2w/errors.hpp"

namespace su2w {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    /// |ket><bra| for two vectors of equal length.
    static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Largest entrywise |a - b|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise |M - M^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

/// Eigenvalues of the Hermitian part (M + M^dagger)/2, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Tr[a b] without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on the subsystems listed in `keep`. Kept factors stay in
/// their original order whatever the order of `keep`; subsystem 0 is the
/// leftmost tensor factor.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Validated quantum state on n qubits: unit trace, Hermitian, PSD.
class DensityMatrix {
public:
    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return matrix_.rows(); }

private:
    DensityMatrix(ComplexMatrix m, std::size_t n) : matrix_(std::move(m)), n_qubits_(n) {}
    friend DensityMatrix validate_density(ComplexMatrix m, std::size_t n_qubits);

    ComplexMatrix matrix_;
    std::size_t n_qubits_;
};

struct ValidationTolerances {
    double trace = 1e-12;
    double hermiticity = 1e-12;
    double eigenvalue_floor = -1e-10;
};

enum class ViolationKind {
    NotSquare,
    NotPowerOfTwo,
    TraceViolation,
    HermiticityViolation,
    NegativityViolation,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    /// Measured size of the violation (|Tr - 1|, max |M - M^dagger|, -lambda_min).
    double magnitude;
};

/// Every failed density-matrix invariant; empty when the matrix is a valid state.
std::vector<Violation> density_violations(const ComplexMatrix& m, std::size_t n_qubits,
                                          const ValidationTolerances& tol = {});

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }
    bool has(ViolationKind kind) const;

private:
    std::vector<Violation> violations_;
};

/// Throws ValidationError listing every failed invariant.
DensityMatrix validate_density(ComplexMatrix m, std::size_t n_qubits);

/// Reduced state of a multi-qubit density matrix.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

}  // namespace su2w

#endif  // SU2W_LINALG_HPP
