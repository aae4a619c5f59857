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

#include "su2w/report.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "su2w/quasiprob.hpp"

namespace su2w {

namespace {

ClosedFormComparison compare(std::string tag, std::size_t k, double nu, double r, const GridSpec& grid,
                             const std::function<double(double, double)>& reference) {
    const auto rho = accelerated_ghz(nu, k, r);
    const auto numeric = sample_grid(rho, DistributionKind::Wigner, grid);

    ClosedFormComparison out;
    out.tag = std::move(tag);
    out.k = k;
    out.nu = nu;
    out.r = r;
    std::size_t worst = 0;
    double worst_ref = reference(grid.theta_at(0), grid.phi_at(0));
    out.max_abs_diff = -1.0;
    for (std::size_t idx = 0; idx < numeric.size(); ++idx) {
        const double theta = grid.theta_at(idx / grid.phi_steps);
        const double phi = grid.phi_at(idx % grid.phi_steps);
        const double ref = reference(theta, phi);
        const double diff = std::abs(numeric[idx] - ref);
        // NaN from a broken expression must register as a mismatch.
        if (diff > out.max_abs_diff || std::isnan(diff)) {
            out.max_abs_diff = std::isnan(diff) ? std::numeric_limits<double>::infinity() : diff;
            worst = idx;
            worst_ref = ref;
        }
    }
    out.argmax = {grid.theta_at(worst / grid.phi_steps), grid.phi_at(worst % grid.phi_steps)};
    out.numeric_at_argmax = numeric[worst];
    out.closed_form_at_argmax = worst_ref;
    out.status = out.max_abs_diff <= kMatchTolerance ? MatchStatus::Match : MatchStatus::Discrepant;
    return out;
}

}  // namespace

ClosedFormComparison compare_closed_form(ClosedFormVariant variant, double nu, double r,
                                         const GridSpec& grid) {
    return compare(to_string(variant), accelerated_count(variant), nu, r, grid,
                   [&](double theta, double phi) { return closed_form(variant, theta, phi, nu, r); });
}

ClosedFormComparison compare_derived_closed_form(std::size_t k, double nu, double r, const GridSpec& grid) {
    return compare("DERIVED" + std::to_string(k), k, nu, r, grid, [&](double theta, double phi) {
        return derived_closed_form(DistributionKind::Wigner, 3, k, theta, phi, nu, r);
    });
}

}  // namespace su2w
