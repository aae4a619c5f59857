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

#ifndef SU2W_REPORT_HPP
#define SU2W_REPORT_HPP

#include <cstddef>
#include <string>

#include "su2w/closed_form.hpp"
#include "su2w/rindler.hpp"
#include "su2w/scan.hpp"

namespace su2w {

struct ClosedFormComparison {
    std::string tag;
    std::size_t k = 0;  ///< accelerated qubits in the numeric state
    double nu = 0.0;
    double r = 0.0;
    double max_abs_diff = 0.0;
    SphericalPoint argmax;
    double numeric_at_argmax = 0.0;
    double closed_form_at_argmax = 0.0;
    MatchStatus status = MatchStatus::Match;
};

/// Grid-wise comparison of a printed closed form against the kernel-trace
/// Wigner function of the GHZ-Werner state with the first k qubits
/// accelerated (k taken from the variant).
ClosedFormComparison compare_closed_form(ClosedFormVariant variant, double nu, double r,
                                         const GridSpec& grid);

/// Same comparison against derived_closed_form with k accelerated qubits.
ClosedFormComparison compare_derived_closed_form(std::size_t k, double nu, double r,
                                                 const GridSpec& grid);

}  // namespace su2w

#endif  // SU2W_REPORT_HPP
