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

#ifndef SU2W_SU2_KERNEL_HPP
#define SU2W_SU2_KERNEL_HPP

#include <span>
#include <string>

#include "su2w/linalg.hpp"

namespace su2w {

/// Member of the s-parametrized family: Q (s=-1), Wigner (s=0), P (s=+1).
enum class DistributionKind : int { Q = -1, Wigner = 0, P = 1 };

inline int s_value(DistributionKind kind) { return static_cast<int>(kind); }
DistributionKind kind_from_s(int s);
std::string to_string(DistributionKind kind);

/// Point on the unit sphere. Angles outside the canonical ranges are used as-is.
struct SphericalPoint {
    double theta = 0.0;
    double phi = 0.0;
};

/// Angular-momentum label stored as twice its value, so 1/2 is HalfInt{1}.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt whole(int v) { return HalfInt{2 * v}; }
    static constexpr HalfInt half(int numerator) { return HalfInt{numerator}; }
    /// Throws InvalidQuantumNumbers unless 2*v is an integer.
    static HalfInt from_double(double v);

    constexpr double value() const { return twice / 2.0; }
    friend constexpr bool operator==(HalfInt, HalfInt) = default;
};

/// <j1 m1; j2 m2 | J M> with Condon-Shortley phases (Racah closed form).
/// Zero when selection rules fail; throws InvalidQuantumNumbers if |m| > j,
/// j < 0, or j and m differ by a half-odd amount.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// Y_{L,K}(theta, phi), orthonormal, Condon-Shortley phase. Only L <= 1.
Complex spherical_harmonic(int L, int K, SphericalPoint point);

/// Spin-1/2 irreducible tensor operator T^dagger_{L,M} in the basis
/// {|0>, |1>}, where |0> carries m = -1/2 and |1> carries m = +1/2.
ComplexMatrix ito(int L, int M);

struct KernelOperator {
    DistributionKind kind;
    SphericalPoint point;
    ComplexMatrix matrix;
};

/// Single-qubit phase-point kernel R^(s)(theta, phi).
KernelOperator kernel(DistributionKind kind, SphericalPoint point);

/// Kronecker product of per-qubit kernels; points.size() must equal n.
ComplexMatrix kernel_n(DistributionKind kind, std::span<const SphericalPoint> points, std::size_t n);

}  // namespace su2w

#endif  // SU2W_SU2_KERNEL_HPP
