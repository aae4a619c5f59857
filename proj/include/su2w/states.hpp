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

#ifndef SU2W_STATES_HPP
#define SU2W_STATES_HPP

#include <cstddef>
#include <vector>

#include "su2w/linalg.hpp"

namespace su2w {

struct GhzWernerParams {
    double nu = 1.0;          ///< weight of the GHZ projector, in [0, 1]
    std::size_t n_qubits = 3;
};

/// (|0...0> + |1...1>)/sqrt(2) as 2^n amplitudes.
std::vector<Complex> ghz_pure(std::size_t n);

/// nu |GHZ><GHZ| + (1 - nu) I / 2^n. Throws MixingOutOfRange for nu outside [0, 1].
DensityMatrix ghz_werner(const GhzWernerParams& params);

}  // namespace su2w

#endif  // SU2W_STATES_HPP
