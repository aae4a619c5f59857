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

#include "su2w/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace su2w {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix: rows and cols must be positive");
    }
    if (data_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
    ComplexMatrix m(ket.size(), bra.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("operator+: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("operator-: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("operator*: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    }
    return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (!m.is_square()) throw DimensionError("hermiticity_defect: matrix not square");
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) throw DimensionError("hermitian_eigenvalues: matrix not square");
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            h(i, j) = 0.5 * (m(ui, uj) + std::conj(m(uj, ui)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionError("trace_of_product: shapes are not transposes of each other");
    }
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    }
    return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    if (!m.is_square()) throw DimensionError("partial_trace: matrix not square");
    if (dims.empty()) throw DimensionError("partial_trace: no subsystems given");
    const std::size_t total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
    if (total != m.rows()) {
        std::ostringstream msg;
        msg << "partial_trace: subsystem dimensions multiply to " << total
            << " but matrix has dimension " << m.rows();
        throw DimensionError(msg.str());
    }
    if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");

    std::vector<bool> kept(dims.size(), false);
    for (std::size_t k : keep) {
        if (k >= dims.size()) throw DimensionError("partial_trace: keep index out of range");
        if (kept[k]) throw DimensionError("partial_trace: duplicate keep index");
        kept[k] = true;
    }

    // Split a composite index into (kept, traced) mixed-radix parts, preserving
    // subsystem order within each part.
    const std::size_t n = m.rows();
    std::vector<std::size_t> kept_part(n);
    std::vector<std::size_t> traced_part(n);
    std::size_t kept_dim = 1;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (kept[s]) kept_dim *= dims[s];
    }
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t rem = idx;
        std::size_t kp = 0, tp = 0, kscale = 1, tscale = 1;
        for (std::size_t s = dims.size(); s-- > 0;) {
            const std::size_t digit = rem % dims[s];
            rem /= dims[s];
            if (kept[s]) {
                kp += digit * kscale;
                kscale *= dims[s];
            } else {
                tp += digit * tscale;
                tscale *= dims[s];
            }
        }
        kept_part[idx] = kp;
        traced_part[idx] = tp;
    }

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (traced_part[i] == traced_part[j]) out(kept_part[i], kept_part[j]) += m(i, j);
        }
    }
    return out;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NotSquare: return "NotSquare";
        case ViolationKind::NotPowerOfTwo: return "NotPowerOfTwo";
        case ViolationKind::TraceViolation: return "TraceViolation";
        case ViolationKind::HermiticityViolation: return "HermiticityViolation";
        case ViolationKind::NegativityViolation: return "NegativityViolation";
    }
    return "Unknown";
}

std::vector<Violation> density_violations(const ComplexMatrix& m, std::size_t n_qubits,
                                          const ValidationTolerances& tol) {
    if (!m.is_square()) {
        return {{ViolationKind::NotSquare, static_cast<double>(m.rows()) - static_cast<double>(m.cols())}};
    }
    if (n_qubits >= 8 * sizeof(std::size_t) || m.rows() != (std::size_t{1} << n_qubits)) {
        return {{ViolationKind::NotPowerOfTwo, static_cast<double>(m.rows())}};
    }

    std::vector<Violation> out;
    const double trace_err = std::abs(m.trace() - 1.0);
    if (trace_err > tol.trace) out.push_back({ViolationKind::TraceViolation, trace_err});

    const double herm_err = hermiticity_defect(m);
    if (herm_err > tol.hermiticity) out.push_back({ViolationKind::HermiticityViolation, herm_err});

    const double lambda_min = hermitian_eigenvalues(m).front();
    if (lambda_min < tol.eigenvalue_floor) out.push_back({ViolationKind::NegativityViolation, -lambda_min});
    return out;
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
    std::ostringstream msg;
    msg << "invalid density matrix:";
    for (const auto& v : violations) msg << ' ' << to_string(v.kind) << '(' << v.magnitude << ')';
    return msg.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

bool ValidationError::has(ViolationKind kind) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

DensityMatrix validate_density(ComplexMatrix m, std::size_t n_qubits) {
    auto violations = density_violations(m, n_qubits);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return DensityMatrix(std::move(m), n_qubits);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    ComplexMatrix reduced = partial_trace(rho.matrix(), dims, keep);
    if (!std::has_single_bit(reduced.rows())) {
        throw DimensionError("partial_trace: kept subsystems do not form a qubit register");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(reduced.rows()));
    return validate_density(std::move(reduced), n);
}

}  // namespace su2w
