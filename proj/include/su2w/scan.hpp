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

#ifndef SU2W_SCAN_HPP
#define SU2W_SCAN_HPP

#include <cstddef>
#include <vector>

#include "su2w/linalg.hpp"
#include "su2w/su2_kernel.hpp"

namespace su2w {

/// Uniform grid: theta_i = pi i / (theta_steps - 1), phi_j = 2 pi j / phi_steps.
struct GridSpec {
    std::size_t theta_steps = 91;
    std::size_t phi_steps = 181;

    double theta_at(std::size_t i) const;
    double phi_at(std::size_t j) const;
    std::size_t size() const { return theta_steps * phi_steps; }
    /// Throws DimensionError if either count is below 2.
    void check() const;
};

/// How grid points are assigned to qubits. With equal_angles every qubit
/// sees the grid point; otherwise qubit 0 scans and qubits 1..n-1 sit at
/// `fixed` (size n-1).
struct ScanPlacement {
    bool equal_angles = true;
    std::vector<SphericalPoint> fixed;
};

struct ScanReport {
    GridSpec grid;
    DistributionKind kind = DistributionKind::Wigner;
    std::vector<double> values;  ///< theta-major: values[i * phi_steps + j]
    double min = 0.0;
    SphericalPoint argmin;
    double max = 0.0;
    SphericalPoint argmax;
    double negative_fraction = 0.0;
    /// Sum over W < 0 of |W| sin(theta) dtheta dphi.
    double negative_volume = 0.0;
};

/// Distribution values over the grid, evaluated with OpenMP.
std::vector<double> sample_grid(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                                const ScanPlacement& placement = {});

ScanReport grid_scan(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                     const ScanPlacement& placement = {});

/// Builds the report from theta-major samples. Ties for min/max keep the
/// first grid point in theta-major order.
ScanReport summarize(const GridSpec& grid, DistributionKind kind, std::vector<double> values);

namespace serial {

/// Single-threaded reference for su2w::sample_grid.
std::vector<double> sample_grid(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                                const ScanPlacement& placement = {});

ScanReport grid_scan(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid,
                     const ScanPlacement& placement = {});

}  // namespace serial

namespace detail {

/// Per-qubit points for grid index `flat`.
void place_points(const GridSpec& grid, const ScanPlacement& placement, std::size_t flat,
                  std::vector<SphericalPoint>& points);
void check_placement(const ScanPlacement& placement, std::size_t n_qubits);

}  // namespace detail

}  // namespace su2w

#endif  // SU2W_SCAN_HPP
