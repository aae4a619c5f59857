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

#include "su2w/quasiprob.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <gsl/gsl_integration.h>

#include "su2w/rindler.hpp"
#include "su2w/states.hpp"

namespace su2w {

QuasiProbSample evaluate(const DensityMatrix& rho, DistributionKind kind,
                         std::span<const SphericalPoint> points) {
    if (points.size() != rho.n_qubits()) {
        std::ostringstream msg;
        msg << "evaluate: " << points.size() << " points for a " << rho.n_qubits() << "-qubit state";
        throw DimensionError(msg.str());
    }
    const ComplexMatrix k = kernel_n(kind, points, points.size());
    const Complex value = trace_of_product(rho.matrix(), k);
    if (std::abs(value.imag()) > kImaginaryTolerance) {
        std::ostringstream msg;
        msg << "evaluate: imaginary residue " << value.imag() << " exceeds tolerance";
        throw NonRealResult(msg.str());
    }
    return {std::vector<SphericalPoint>(points.begin(), points.end()), kind, value.real()};
}

double evaluate_equal(const DensityMatrix& rho, DistributionKind kind, SphericalPoint point) {
    const std::vector<SphericalPoint> points(rho.n_qubits(), point);
    return evaluate(rho, kind, points).value;
}

DensityMatrix accelerated_ghz(double nu, std::size_t k, double r, std::size_t n_qubits) {
    if (k > n_qubits) throw IndexOutOfRange("more accelerated qubits than qubits");
    return accelerate(ghz_werner({nu, n_qubits}), {r, leading_qubits(k)});
}

double normalization_check(const DensityMatrix& rho, DistributionKind kind, std::size_t quad_order) {
    using std::numbers::pi;
    if (quad_order < 16) throw std::invalid_argument("normalization_check: quad_order must be >= 16");

    // The angles of different qubits are integrated independently, so the
    // n-fold integral of Tr[rho R_1 (x) ... (x) R_n] is Tr[rho Rbar^(x)n] with
    // Rbar the sphere average of the single-qubit kernel.
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(quad_order);
    if (table == nullptr) throw std::runtime_error("normalization_check: GSL table allocation failed");
    const std::size_t phi_nodes = 2 * quad_order;
    const double dphi = 2.0 * pi / static_cast<double>(phi_nodes);

    ComplexMatrix average(2, 2);
    for (std::size_t i = 0; i < quad_order; ++i) {
        double x = 0.0;
        double w = 0.0;
        gsl_integration_glfixed_point(-1.0, 1.0, i, &x, &w, table);
        const double theta = std::acos(x);
        for (std::size_t j = 0; j < phi_nodes; ++j) {
            const SphericalPoint p{theta, dphi * static_cast<double>(j)};
            average += kernel(kind, p).matrix * Complex(w * dphi / (2.0 * pi));
        }
    }
    gsl_integration_glfixed_table_free(table);

    ComplexMatrix product = average;
    for (std::size_t q = 1; q < rho.n_qubits(); ++q) product = kron(product, average);
    return trace_of_product(rho.matrix(), product).real();
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw std::invalid_argument("linspace: need at least two samples");
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

std::vector<CurvePoint> scan_vs_r(double nu, std::size_t k, std::span<const double> r_samples,
                                  double theta, double phi, DistributionKind kind) {
    std::vector<CurvePoint> out;
    out.reserve(r_samples.size());
    for (double r : r_samples) {
        const auto rho = accelerated_ghz(nu, k, r);
        out.push_back({r, evaluate_equal(rho, kind, {theta, phi})});
    }
    return out;
}

std::vector<CurvePoint> scan_vs_nu(double r, std::size_t k, std::span<const double> nu_samples,
                                   double theta, double phi, DistributionKind kind) {
    std::vector<CurvePoint> out;
    out.reserve(nu_samples.size());
    for (double nu : nu_samples) {
        const auto rho = accelerated_ghz(nu, k, r);
        out.push_back({nu, evaluate_equal(rho, kind, {theta, phi})});
    }
    return out;
}

ThresholdResult negativity_threshold(std::size_t k, double r, double theta, double phi) {
    auto w_at = [&](double nu) {
        return evaluate_equal(accelerated_ghz(nu, k, r), DistributionKind::Wigner, {theta, phi});
    };
    double lo = 0.0;
    double hi = 1.0;
    const double w_lo = w_at(lo);
    const double w_hi = w_at(hi);
    if (w_lo == 0.0) return {true, lo};
    if (w_hi == 0.0) return {true, hi};
    if ((w_lo > 0.0) == (w_hi > 0.0)) return {false, std::numeric_limits<double>::quiet_NaN()};

    const bool lo_positive = w_lo > 0.0;
    while (hi - lo > kThresholdTolerance) {
        const double mid = 0.5 * (lo + hi);
        const double w_mid = w_at(mid);
        if (w_mid == 0.0) return {true, mid};
        if ((w_mid > 0.0) == lo_positive) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {true, 0.5 * (lo + hi)};
}

}  // namespace su2w
