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

#include "su2w/rindler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "su2w/states.hpp"

namespace su2w {

void check_acceleration(double r) {
    if (!(r >= 0.0 && r <= kMaxAcceleration + kAccelerationSlack)) {
        std::ostringstream msg;
        msg << "acceleration parameter r=" << r << " outside [0, pi/4]";
        throw ROutOfRange(msg.str());
    }
}

std::vector<std::size_t> leading_qubits(std::size_t k) {
    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = i;
    return out;
}

ComplexMatrix unruh_isometry(double r) {
    check_acceleration(r);
    ComplexMatrix v(4, 2);
    v(0, 0) = std::cos(r);  // |0_I 0_II>
    v(3, 0) = std::sin(r);  // |1_I 1_II>
    v(2, 1) = 1.0;          // |1_I 0_II>
    return v;
}

namespace {

// I_{2^q} (x) V (x) I_{2^(n-q-1)}: maps n qubits to n+1 factors with region
// II inserted right after qubit q.
ComplexMatrix embed_isometry(const ComplexMatrix& v, std::size_t q, std::size_t n) {
    const auto left = ComplexMatrix::identity(std::size_t{1} << q);
    const auto right = ComplexMatrix::identity(std::size_t{1} << (n - q - 1));
    return kron(kron(left, v), right);
}

}  // namespace

DensityMatrix accelerate(const DensityMatrix& rho, const AccelerationConfig& config) {
    check_acceleration(config.r);
    const std::size_t n = rho.n_qubits();
    std::vector<bool> seen(n, false);
    for (std::size_t q : config.accelerated) {
        if (q >= n) {
            std::ostringstream msg;
            msg << "accelerated qubit index " << q << " out of range for " << n << " qubits";
            throw IndexOutOfRange(msg.str());
        }
        if (seen[q]) {
            std::ostringstream msg;
            msg << "accelerated qubit index " << q << " listed twice";
            throw IndexOutOfRange(msg.str());
        }
        seen[q] = true;
    }
    if (config.accelerated.empty()) return rho;

    const ComplexMatrix v = unruh_isometry(config.r);
    const std::vector<std::size_t> dims(n + 1, 2);
    ComplexMatrix current = rho.matrix();
    for (std::size_t q : config.accelerated) {
        const ComplexMatrix w = embed_isometry(v, q, n);
        const ComplexMatrix extended = w * current * w.adjoint();
        std::vector<std::size_t> keep;
        keep.reserve(n);
        for (std::size_t f = 0; f <= n; ++f) {
            if (f != q + 1) keep.push_back(f);
        }
        current = partial_trace(extended, dims, keep);
    }
    return validate_density(std::move(current), n);
}

std::string to_string(TableVariant v) {
    switch (v) {
        case TableVariant::A: return "A";
        case TableVariant::B: return "B";
        case TableVariant::C: return "C";
    }
    return "?";
}

std::string to_string(MatchStatus status) {
    return status == MatchStatus::Match ? "MATCH" : "DISCREPANT";
}

std::array<std::string, 10> CoefficientTable::labels() const {
    const std::string p = to_string(variant);
    std::array<std::string, 10> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = p + std::to_string(i + 1) + std::to_string(i + 1);
    // The |111><111| coefficient of table C is printed as "C12".
    if (variant == TableVariant::C) out[7] = "C88 (printed C12)";
    out[8] = p + "18";
    out[9] = p + "81";
    // Table B never prints B81; Hermiticity implies it equals B18.
    if (variant == TableVariant::B) out[9] = "B81 (not printed, taken = B18)";
    return out;
}

std::array<double, 10> CoefficientTable::values() const {
    std::array<double, 10> out{};
    std::copy(diagonal.begin(), diagonal.end(), out.begin());
    out[8] = coherence_upper;
    out[9] = coherence_lower;
    return out;
}

double CoefficientTable::diagonal_sum() const {
    double sum = 0.0;
    for (double d : diagonal) sum += d;
    return sum;
}

CoefficientTable coefficient_table(TableVariant variant, double nu, double r) {
    const double c = std::cos(r);
    const double s = std::sin(r);
    const double c2 = c * c;
    const double s2 = s * s;
    const double plus = (1.0 + 3.0 * nu) / 8.0;
    const double minus = (1.0 - nu) / 8.0;

    const double a11 = plus * c2;
    const double a22 = plus * s2 + minus;
    const double a33 = minus * c2;  // = A55 = A77
    const double a44 = minus * (s2 + 1.0);  // = A66
    const double a88 = plus + minus * s2;
    const double a18 = nu / 2.0 * c;

    CoefficientTable t{variant};
    switch (variant) {
        case TableVariant::A:
            t.diagonal = {a11, a22, a33, a44, a33, a44, a33, a88};
            t.coherence_upper = t.coherence_lower = a18;
            break;
        case TableVariant::B: {
            const double b11 = a11 * c2;
            const double b22 = a22 * c2;
            const double b44 = std::pow(std::tan(r), 4) * b11 + a44;
            const double b55 = a33 * c2;
            const double b66 = a44 * c2;
            const double b77 = a44 * c2 + minus * s2;
            const double b88 = a44 * (s2 + 1.0);
            t.diagonal = {b11, b22, b22, b44, b55, b66, b77, b88};
            t.coherence_upper = t.coherence_lower = a18 * c;
            break;
        }
        case TableVariant::C: {
            const double c4 = c2 * c2;
            const double c11 = a11 * c4;
            const double c22 = a22 * c4;
            const double c44 = a22 * c2 + 2.0 * a33 * s2;
            const double c88 = 3.0 * a44 * s2 + plus * (std::pow(s, 6) + 1.0);
            t.diagonal = {c11, c22, c22, c44, c22, c44, c44, c88};
            t.coherence_upper = t.coherence_lower = a18 * c2;
            break;
        }
    }
    return t;
}

std::vector<std::size_t> table_subset(TableVariant variant) {
    switch (variant) {
        case TableVariant::A: return {2};
        case TableVariant::B: return {1, 2};
        case TableVariant::C: return {0, 1, 2};
    }
    return {};
}

CoefficientReport coefficient_report(TableVariant variant, double nu, double r) {
    const CoefficientTable printed = coefficient_table(variant, nu, r);
    const DensityMatrix rho = accelerate(ghz_werner({nu, 3}), {r, table_subset(variant)});
    const ComplexMatrix& m = rho.matrix();

    std::array<double, 10> numeric{};
    for (std::size_t i = 0; i < 8; ++i) numeric[i] = m(i, i).real();
    numeric[8] = m(0, 7).real();
    numeric[9] = m(7, 0).real();

    CoefficientReport report;
    report.variant = variant;
    report.nu = nu;
    report.r = r;
    const auto labels = printed.labels();
    const auto values = printed.values();
    for (std::size_t i = 0; i < 10; ++i) {
        const double diff = std::abs(values[i] - numeric[i]);
        report.entries.push_back({labels[i], values[i], numeric[i], diff});
        report.max_abs_diff = std::max(report.max_abs_diff, diff);
    }
    report.printed_trace = printed.diagonal_sum();
    report.numeric_trace = m.trace().real();
    report.status = report.max_abs_diff <= kMatchTolerance ? MatchStatus::Match : MatchStatus::Discrepant;

    // Entries outside the ten named ones must vanish for the table's form to hold.
    double off_pattern = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const bool named = i == j || (i == 0 && j == 7) || (i == 7 && j == 0);
            if (!named) off_pattern = std::max(off_pattern, std::abs(m(i, j)));
        }
    }
    if (off_pattern > kMatchTolerance) {
        report.status = MatchStatus::Discrepant;
        std::ostringstream note;
        note << "numeric state has entries outside the tabulated pattern (max " << off_pattern << ")";
        report.note = note.str();
    } else if (std::abs(report.printed_trace - 1.0) > kMatchTolerance) {
        std::ostringstream note;
        note << "printed diagonal sums to " << report.printed_trace;
        report.note = note.str();
    }
    return report;
}

}  // namespace su2w
