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

#include "su2w/states.hpp"

#include <cmath>
#include <sstream>

namespace su2w {

std::vector<Complex> ghz_pure(std::size_t n) {
    if (n == 0 || n > 7) throw DimensionError("ghz_pure: qubit count must be in 1..7");
    std::vector<Complex> psi(std::size_t{1} << n);
    const double amp = 1.0 / std::sqrt(2.0);
    psi.front() = amp;
    psi.back() = amp;
    return psi;
}

DensityMatrix ghz_werner(const GhzWernerParams& params) {
    if (!(params.nu >= 0.0 && params.nu <= 1.0)) {
        std::ostringstream msg;
        msg << "mixing parameter nu=" << params.nu << " outside [0, 1]";
        throw MixingOutOfRange(msg.str());
    }
    const auto psi = ghz_pure(params.n_qubits);
    const std::size_t dim = psi.size();
    ComplexMatrix rho = ComplexMatrix::outer(psi, psi) * params.nu;
    const double background = (1.0 - params.nu) / static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i) rho(i, i) += background;
    return validate_density(std::move(rho), params.n_qubits);
}

}  // namespace su2w
