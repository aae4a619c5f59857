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

#include "su2w/su2_kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace su2w {

DistributionKind kind_from_s(int s) {
    switch (s) {
        case -1: return DistributionKind::Q;
        case 0: return DistributionKind::Wigner;
        case 1: return DistributionKind::P;
        default: break;
    }
    throw std::invalid_argument("distribution parameter s must be -1, 0 or 1");
}

std::string to_string(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::Q: return "q";
        case DistributionKind::Wigner: return "w";
        case DistributionKind::P: return "p";
    }
    return "?";
}

HalfInt HalfInt::from_double(double v) {
    const double twice = 2.0 * v;
    if (!std::isfinite(twice) || std::abs(twice - std::round(twice)) > 1e-12) {
        std::ostringstream msg;
        msg << "not a half-integer: " << v;
        throw InvalidQuantumNumbers(msg.str());
    }
    return HalfInt{static_cast<int>(std::lround(twice))};
}

namespace {

double factorial(int n) {
    // Arguments are already validated as non-negative.
    return std::tgamma(static_cast<double>(n) + 1.0);
}

void check_pair(HalfInt j, HalfInt m, const char* name) {
    if (j.twice < 0 || std::abs(m.twice) > j.twice || (j.twice - m.twice) % 2 != 0) {
        std::ostringstream msg;
        msg << "invalid quantum numbers for " << name << ": j=" << j.value() << " m=" << m.value();
        throw InvalidQuantumNumbers(msg.str());
    }
}

}  // namespace

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    check_pair(j1, m1, "(j1,m1)");
    check_pair(j2, m2, "(j2,m2)");
    check_pair(J, M, "(J,M)");

    if (m1.twice + m2.twice != M.twice) return 0.0;
    if (J.twice < std::abs(j1.twice - j2.twice) || J.twice > j1.twice + j2.twice) return 0.0;
    if ((j1.twice + j2.twice + J.twice) % 2 != 0) return 0.0;

    // All combinations below are integers once the triangle and parity checks pass.
    const int a = (j1.twice + j2.twice - J.twice) / 2;  // j1 + j2 - J
    const int b = (j1.twice - m1.twice) / 2;            // j1 - m1
    const int c = (j2.twice + m2.twice) / 2;            // j2 + m2
    const int d = (J.twice - j2.twice + m1.twice) / 2;  // J - j2 + m1
    const int e = (J.twice - j1.twice - m2.twice) / 2;  // J - j1 - m2

    const double norm =
        std::sqrt((J.twice + 1) * factorial((J.twice + j1.twice - j2.twice) / 2) *
                  factorial((J.twice - j1.twice + j2.twice) / 2) * factorial(a) /
                  factorial((j1.twice + j2.twice + J.twice) / 2 + 1)) *
        std::sqrt(factorial((J.twice + M.twice) / 2) * factorial((J.twice - M.twice) / 2) *
                  factorial(b) * factorial((j1.twice + m1.twice) / 2) *
                  factorial((j2.twice - m2.twice) / 2) * factorial(c));

    double sum = 0.0;
    const int k_min = std::max({0, -d, -e});
    const int k_max = std::min({a, b, c});
    for (int k = k_min; k <= k_max; ++k) {
        const double term = 1.0 / (factorial(k) * factorial(a - k) * factorial(b - k) *
                                   factorial(c - k) * factorial(d + k) * factorial(e + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    return norm * sum;
}

Complex spherical_harmonic(int L, int K, SphericalPoint point) {
    using std::numbers::pi;
    if (L < 0 || std::abs(K) > L) throw InvalidQuantumNumbers("spherical_harmonic: need |K| <= L");
    if (L > 1) throw UnsupportedOrder("spherical_harmonic: only L <= 1 is implemented");

    if (L == 0) return 0.5 / std::sqrt(pi);
    if (K == 0) return std::sqrt(3.0 / (4.0 * pi)) * std::cos(point.theta);
    const double magnitude = std::sqrt(3.0 / (8.0 * pi)) * std::sin(point.theta);
    return -static_cast<double>(K) * magnitude * std::polar(1.0, K * point.phi);
}

ComplexMatrix ito(int L, int M) {
    if (L < 0 || std::abs(M) > L) throw InvalidQuantumNumbers("ito: need |M| <= L");
    if (L > 1) throw UnsupportedOrder("ito: only L <= 1 is implemented for spin 1/2");

    constexpr HalfInt j = HalfInt::half(1);
    const double scale = ((M % 2 == 0) ? 1.0 : -1.0) * std::sqrt((2.0 * L + 1.0) / 2.0);
    ComplexMatrix t(2, 2);
    // Basis index 0 <-> m = -1/2, index 1 <-> m = +1/2.
    for (int col = 0; col < 2; ++col) {
        for (int row = 0; row < 2; ++row) {
            const HalfInt k{2 * col - 1};
            const HalfInt k_prime{2 * row - 1};
            t(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                scale * clebsch_gordan(j, k, HalfInt::whole(L), HalfInt::whole(-M), j, k_prime);
        }
    }
    return t;
}

namespace {

struct KernelBasis {
    // T^dagger_{L,K} for (L,K) = (0,0), (1,-1), (1,0), (1,1).
    std::array<ComplexMatrix, 4> tensors{ComplexMatrix(2, 2), ComplexMatrix(2, 2),
                                         ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
    // <J J; L 0 | J J> for L = 0, 1.
    std::array<double, 2> stretched_cg{};
};

const KernelBasis& kernel_basis() {
    static const KernelBasis basis = [] {
        KernelBasis b;
        b.tensors = {ito(0, 0), ito(1, -1), ito(1, 0), ito(1, 1)};
        constexpr HalfInt j = HalfInt::half(1);
        for (int L = 0; L <= 1; ++L) {
            b.stretched_cg[static_cast<std::size_t>(L)] =
                clebsch_gordan(j, j, HalfInt::whole(L), HalfInt::whole(0), j, j);
        }
        return b;
    }();
    return basis;
}

}  // namespace

KernelOperator kernel(DistributionKind kind, SphericalPoint point) {
    using std::numbers::pi;
    const auto& basis = kernel_basis();
    const int s = s_value(kind);
    // sqrt(4 pi / (2J + 1)) with J = 1/2.
    const double prefactor = std::sqrt(2.0 * pi);

    ComplexMatrix r(2, 2);
    std::size_t slot = 0;
    for (int L = 0; L <= 1; ++L) {
        const double weight = std::pow(basis.stretched_cg[static_cast<std::size_t>(L)], -s);
        for (int K = -L; K <= L; ++K, ++slot) {
            const Complex coeff = prefactor * weight * spherical_harmonic(L, K, point);
            const auto& t = basis.tensors[slot];
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) r(i, j) += coeff * t(i, j);
            }
        }
    }
    return {kind, point, std::move(r)};
}

ComplexMatrix kernel_n(DistributionKind kind, std::span<const SphericalPoint> points, std::size_t n) {
    if (points.size() != n || n == 0) {
        std::ostringstream msg;
        msg << "kernel_n: expected " << n << " points, got " << points.size();
        throw DimensionError(msg.str());
    }
    ComplexMatrix out = kernel(kind, points[0]).matrix;
    for (std::size_t q = 1; q < n; ++q) out = kron(out, kernel(kind, points[q]).matrix);
    return out;
}

}  // namespace su2w
