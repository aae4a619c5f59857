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

#ifndef SU2W_CLOSED_FORM_HPP
#define SU2W_CLOSED_FORM_HPP

#include <cstddef>
#include <string>

#include "su2w/su2_kernel.hpp"

namespace su2w {

/// Published closed-form Wigner functions of the GHZ-Werner state with
/// 0, 1, 2 or 3 accelerated qubits.
enum class ClosedFormVariant { GHZ, ACC1, ACC2, ACC3 };

std::string to_string(ClosedFormVariant v);
std::size_t accelerated_count(ClosedFormVariant v);

/// Evaluates the expression exactly as printed. `r` is ignored for GHZ.
/// Diagnostics only: ACC2 and ACC3 do not reduce to GHZ at r = 0.
double closed_form(ClosedFormVariant variant, double theta, double phi, double nu, double r);

/// Closed form obtained from the kernel-trace pipeline for an n-qubit
/// GHZ-Werner state with k qubits accelerated and the same point on every
/// qubit:
///   (1-nu)/2^n u^k + nu/2 [d0^(n-k) (cos^2 r d0 + sin^2 r d1)^k + d1^n]
///     + nu cos^k r o^n cos(n phi)
/// with g = 3^((s+1)/2), d0,1 = (1 -/+ g cos theta)/2, o = g sin(theta)/2
/// and u = 1 + g sin^2 r cos theta.
double derived_closed_form(DistributionKind kind, std::size_t n, std::size_t k, double theta,
                           double phi, double nu, double r);

}  // namespace su2w

#endif  // SU2W_CLOSED_FORM_HPP
