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

#include "su2w/scan.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace su2w {

double GridSpec::theta_at(std::size_t i) const {
    return std::numbers::pi * static_cast<double>(i) / static_cast<double>(theta_steps - 1);
}

double GridSpec::phi_at(std::size_t j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(phi_steps);
}

void GridSpec::check() const {
    if (theta_steps < 2 || phi_steps < 2) {
        std::ostringstream msg;
        msg << "grid needs at least 2 steps per axis, got " << theta_steps << "x" << phi_steps;
        throw DimensionError(msg.str());
    }
}

namespace detail {

void place_points(const GridSpec& grid, const ScanPlacement& placement, std::size_t flat,
                  std::vector<SphericalPoint>& points) {
    const SphericalPoint p{grid.theta_at(flat / grid.phi_steps), grid.phi_at(flat % grid.phi_steps)};
    if (placement.equal_angles) {
        for (auto& q : points) q = p;
        return;
    }
    points[0] = p;
    for (std::size_t q = 1; q < points.size(); ++q) points[q] = placement.fixed[q - 1];
}

void check_placement(const ScanPlacement& placement, std::size_t n_qubits) {
    if (!placement.equal_angles && placement.fixed.size() + 1 != n_qubits) {
        std::ostringstream msg;
        msg << "scan placement: " << placement.fixed.size() << " fixed points for " << n_qubits
            << " qubits (need n-1)";
        throw DimensionError(msg.str());
    }
}

}  // namespace detail

ScanReport summarize(const GridSpec& grid, DistributionKind kind, std::vector<double> values) {
    grid.check();
    if (values.size() != grid.size()) throw DimensionError("summarize: sample count does not match grid");

    ScanReport report;
    report.grid = grid;
    report.kind = kind;

    const double dtheta = std::numbers::pi / static_cast<double>(grid.theta_steps - 1);
    const double dphi = 2.0 * std::numbers::pi / static_cast<double>(grid.phi_steps);
    std::size_t argmin = 0;
    std::size_t argmax = 0;
    std::size_t negatives = 0;
    double volume = 0.0;
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        const double w = values[idx];
        if (w < values[argmin]) argmin = idx;
        if (w > values[argmax]) argmax = idx;
        if (w < 0.0) {
            ++negatives;
            volume += -w * std::sin(grid.theta_at(idx / grid.phi_steps)) * dtheta * dphi;
        }
    }
    auto point_of = [&](std::size_t idx) {
        return SphericalPoint{grid.theta_at(idx / grid.phi_steps), grid.phi_at(idx % grid.phi_steps)};
    };
    report.min = values[argmin];
    report.argmin = point_of(argmin);
    report.max = values[argmax];
    report.argmax = point_of(argmax);
    report.negative_fraction = static_cast<double>(negatives) / static_cast<double>(values.size());
    report.negative_volume = volume;
    report.values = std::move(values);
    return report;
}

}  // namespace su2w
