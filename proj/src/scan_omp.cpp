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

#include <exception>

#include "su2w/quasiprob.hpp"
#include "su2w/scan.hpp"

namespace su2w {

std::vector<double> sample_grid(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                                const ScanPlacement& placement) {
    grid.check();
    detail::check_placement(placement, rho.n_qubits());

    const auto total = static_cast<std::ptrdiff_t>(grid.size());
    std::vector<double> values(grid.size());
    std::exception_ptr failure;

#pragma omp parallel
    {
        std::vector<SphericalPoint> points(rho.n_qubits());
#pragma omp for schedule(static)
        for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
            try {
                const auto flat = static_cast<std::size_t>(idx);
                detail::place_points(grid, placement, flat, points);
                values[flat] = evaluate(rho, kind, points).value;
            } catch (...) {
#pragma omp critical(su2w_sample_grid_error)
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    return values;
}

ScanReport grid_scan(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                     const ScanPlacement& placement) {
    return summarize(grid, kind, sample_grid(rho, kind, grid, placement));
}

}  // namespace su2w
