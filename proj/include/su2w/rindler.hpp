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

#ifndef SU2W_RINDLER_HPP
#define SU2W_RINDLER_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "su2w/linalg.hpp"

namespace su2w {

/// Upper end of the admissible acceleration parameter range [0, pi/4].
inline constexpr double kMaxAcceleration = 0.78539816339744830962;
/// Slack accepted above kMaxAcceleration so that decimal renderings of pi/4
/// such as 0.7853982 are admitted. The value is used unchanged.
inline constexpr double kAccelerationSlack = 1e-6;

struct AccelerationConfig {
    double r = 0.0;
    /// Indices of accelerated qubits; 0 is the leftmost tensor factor.
    std::vector<std::size_t> accelerated;
};

/// Throws ROutOfRange unless 0 <= r <= pi/4 (up to kAccelerationSlack).
void check_acceleration(double r);

/// The first k qubits {0, ..., k-1}: the a / a,b / a,b,c cases.
std::vector<std::size_t> leading_qubits(std::size_t k);

/// Isometry |0> -> cos r |0_I 0_II> + sin r |1_I 1_II>, |1> -> |1_I 0_II>.
/// Rows are indexed by 2*i_I + i_II.
ComplexMatrix unruh_isometry(double r);

/// Maps each accelerated qubit into its region-I/region-II pair and traces
/// out region II. The result has the input's qubit count.
DensityMatrix accelerate(const DensityMatrix& rho, const AccelerationConfig& config);

enum class TableVariant { A, B, C };

std::string to_string(TableVariant v);

/// Coefficients of the accelerated GHZ-Werner state in the basis
/// |000>..|111>: eight diagonal populations plus the |000><111| coherence
/// and its mirror.
struct CoefficientTable {
    TableVariant variant;
    std::array<double, 8> diagonal{};
    double coherence_upper = 0.0;  ///< <000|rho|111>
    double coherence_lower = 0.0;  ///< <111|rho|000>

    /// Labels such as "A11" ... "A88", "A18", "A81"; ten entries in the
    /// order diagonal, upper, lower.
    std::array<std::string, 10> labels() const;
    std::array<double, 10> values() const;
    double diagonal_sum() const;
};

/// The closed-form coefficient expressions as published, typos included.
CoefficientTable coefficient_table(TableVariant variant, double nu, double r);

/// Qubits whose acceleration the published table describes. The table
/// kets flip the rightmost bit for one accelerated qubit, so the trailing
/// qubits are used: {2}, {1,2}, {0,1,2}.
std::vector<std::size_t> table_subset(TableVariant variant);

enum class MatchStatus { Match, Discrepant };

std::string to_string(MatchStatus status);

inline constexpr double kMatchTolerance = 1e-12;

struct CoefficientEntry {
    std::string label;
    double printed = 0.0;
    double numeric = 0.0;
    double abs_diff = 0.0;
};

struct CoefficientReport {
    TableVariant variant;
    double nu = 0.0;
    double r = 0.0;
    std::vector<CoefficientEntry> entries;
    double max_abs_diff = 0.0;
    double printed_trace = 0.0;
    double numeric_trace = 0.0;
    MatchStatus status = MatchStatus::Match;
    std::string note;
};

/// Compares the published table against the channel applied to the
/// three-qubit GHZ-Werner state.
CoefficientReport coefficient_report(TableVariant variant, double nu, double r);

}  // namespace su2w

#endif  // SU2W_RINDLER_HPP
