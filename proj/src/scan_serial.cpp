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

#include "su2w/quasiprob.hpp"
#include "su2w/scan.hpp"

namespace su2w::serial {

std::vector<double> sample_grid(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                                const ScanPlacement& placement) {
    grid.check();
    detail::check_placement(placement, rho.n_qubits());

    std::vector<double> values(grid.size());
    std::vector<SphericalPoint> points(rho.n_qubits());
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        detail::place_points(grid, placement, idx, points);
        values[idx] = evaluate(rho, kind, points).value;
    }
    return values;
}

ScanReport grid_scan(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                     const ScanPlacement& placement) {
    return summarize(grid, kind, serial::sample_grid(rho, kind, grid, placement));
}

}  // namespace su2w::serial
