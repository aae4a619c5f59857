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

#ifndef SU2W_QUASIPROB_HPP
#define SU2W_QUASIPROB_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "su2w/linalg.hpp"
#include "su2w/su2_kernel.hpp"

namespace su2w {

/// Largest |Im Tr[rho R]| accepted before NonRealResult is raised.
inline constexpr double kImaginaryTolerance = 1e-10;

struct QuasiProbSample {
    std::vector<SphericalPoint> points;  ///< one per qubit
    DistributionKind kind;
    double value;
};

/// W^(s) = Re Tr[rho (R_1 (x) ... (x) R_n)], one point per qubit.
QuasiProbSample evaluate(const DensityMatrix& rho, DistributionKind kind,
                         std::span<const SphericalPoint> points);

/// Value with the same point on every qubit.
double evaluate_equal(const DensityMatrix& rho, DistributionKind kind, SphericalPoint point);

/// GHZ-Werner state on three qubits with the first k qubits accelerated by r.
DensityMatrix accelerated_ghz(double nu, std::size_t k, double r, std::size_t n_qubits = 3);

/// (2 pi)^-n times the integral of W over n independent spheres. Gauss-Legendre
/// in cos(theta) with `quad_order` nodes, trapezoid in phi. quad_order >= 16.
double normalization_check(const DensityMatrix& rho, DistributionKind kind, std::size_t quad_order);

struct CurvePoint {
    double x;
    double value;
};

/// Distribution value at (theta, phi) on all qubits as a function of r,
/// with the first k qubits accelerated.
std::vector<CurvePoint> scan_vs_r(double nu, std::size_t k, std::span<const double> r_samples,
                                  double theta, double phi,
                                  DistributionKind kind = DistributionKind::Wigner);

/// Distribution value at (theta, phi) on all qubits as a function of nu.
std::vector<CurvePoint> scan_vs_nu(double r, std::size_t k, std::span<const double> nu_samples,
                                   double theta, double phi,
                                   DistributionKind kind = DistributionKind::Wigner);

/// Evenly spaced samples over [lo, hi], endpoints included; count >= 2.
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct ThresholdResult {
    bool sign_change = false;
    double nu_star = 0.0;  ///< NaN when !sign_change
};

inline constexpr double kThresholdTolerance = 1e-9;

/// Mixing parameter where the Wigner value at (theta, phi) changes sign,
/// found by bisection on [0, 1].
ThresholdResult negativity_threshold(std::size_t k, double r, double theta, double phi);

}  // namespace su2w

#endif  // SU2W_QUASIPROB_HPP
