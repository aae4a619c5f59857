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

#include "su2w/closed_form.hpp"

#include <cmath>

namespace su2w {

std::string to_string(ClosedFormVariant v) {
    switch (v) {
        case ClosedFormVariant::GHZ: return "GHZ";
        case ClosedFormVariant::ACC1: return "ACC1";
        case ClosedFormVariant::ACC2: return "ACC2";
        case ClosedFormVariant::ACC3: return "ACC3";
    }
    return "?";
}

std::size_t accelerated_count(ClosedFormVariant v) {
    switch (v) {
        case ClosedFormVariant::GHZ: return 0;
        case ClosedFormVariant::ACC1: return 1;
        case ClosedFormVariant::ACC2: return 2;
        case ClosedFormVariant::ACC3: return 3;
    }
    return 0;
}

namespace {

const double kSqrt3 = std::sqrt(3.0);

double ghz(double theta, double phi, double nu) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    return (3.0 * kSqrt3 * nu * st * st * st * std::cos(3.0 * phi) + 9.0 * nu * ct * ct + 1.0) / 8.0;
}

double acc1(double theta, double phi, double nu, double r) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const double sr = std::sin(r);
    const double inner = 6.0 * nu * st * st * st * std::cos(r) * std::cos(3.0 * phi) +
                         ct * sr * sr * (3.0 * nu * std::cos(2.0 * theta) + 3.0 * nu + 2.0);
    return (kSqrt3 * inner +
            6.0 * nu * (ct * ct * std::cos(2.0 * r) + std::cos(2.0 * theta) + 1.0) + 2.0) /
           16.0;
}

// The printed expression leaves "33 nu (cos 2theta + 1" unclosed; the
// parenthesis is closed right after the "+1".
double acc2(double theta, double phi, double nu, double r) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const double cr = std::cos(r);
    const double sr = std::sin(r);
    const double s2r = std::sin(2.0 * r);
    const double c2t = std::cos(2.0 * theta);
    const double sum =
        25.0 + 48.0 * kSqrt3 * nu * st * st * st * cr * cr * std::cos(3.0 * phi) + 9.0 * c2t +
        33.0 * nu * (c2t + 1.0) +
        4.0 * kSqrt3 * ct *
            (3.0 * nu * c2t * s2r * s2r + sr * sr * (6.0 * nu * std::cos(2.0 * r) + 6.0 * nu + 8.0)) +
        ct * ct * (4.0 * (3.0 * nu - 1.0) * std::cos(2.0 * r) + (nu + 1.0) * std::cos(4.0 * r));
    return sum / 128.0;
}

// kappa_2 is printed with an unclosed parenthesis; it is read as
// mu_+ sin^4 r + 2 (1 - nu)(sin^2 r + 1).
double acc3(double theta, double phi, double nu, double r) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const double cr = std::cos(r);
    const double sr = std::sin(r);
    const double sr2 = sr * sr;
    const double sr4 = sr2 * sr2;
    const double eta_p = kSqrt3 * ct + 1.0;
    const double eta_m = kSqrt3 * ct - 1.0;
    const double mu_p = 1.0 + 3.0 * nu;
    const double mu_m = 1.0 - 3.0 * nu;
    const double kappa1 = (3.0 * std::cos(2.0 * theta) + 1.0) * (mu_p * std::cos(2.0 * r) - nu - 3.0);
    const double kappa2 = mu_p * sr4 + 2.0 * (1.0 - nu) * (sr2 + 1.0);
    const double kappa3 = mu_p * sr4 + 2.0 * mu_m * sr2 + mu_p;
    const double braces = kSqrt3 * nu * st * st * st * cr * cr * cr * std::cos(3.0 * phi) -
                          (1.5 * eta_p * std::pow(cr, 4)) * kappa1 -
                          (6.0 * eta_m * eta_p * eta_p * cr * cr) * kappa2 +
                          2.0 * eta_p * eta_p * eta_p * (sr2 + 1.0) * kappa3 -
                          2.0 * mu_p * eta_m * eta_m * eta_m * std::pow(cr, 6);
    return 48.0 / 128.0 * braces;
}

}  // namespace

double closed_form(ClosedFormVariant variant, double theta, double phi, double nu, double r) {
    switch (variant) {
        case ClosedFormVariant::GHZ: return ghz(theta, phi, nu);
        case ClosedFormVariant::ACC1: return acc1(theta, phi, nu, r);
        case ClosedFormVariant::ACC2: return acc2(theta, phi, nu, r);
        case ClosedFormVariant::ACC3: return acc3(theta, phi, nu, r);
    }
    return 0.0;
}

double derived_closed_form(DistributionKind kind, std::size_t n, std::size_t k, double theta,
                           double phi, double nu, double r) {
    const double g = std::pow(3.0, (s_value(kind) + 1) / 2.0);
    const double ct = std::cos(theta);
    const double d0 = 0.5 * (1.0 - g * ct);
    const double d1 = 0.5 * (1.0 + g * ct);
    const double o = 0.5 * g * std::sin(theta);
    const double cr = std::cos(r);
    const double sr = std::sin(r);
    const double u = 1.0 + g * sr * sr * ct;
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);

    const double mixed = (1.0 - nu) / std::pow(2.0, nd) * std::pow(u, kd);
    const double populations =
        0.5 * nu * (std::pow(d0, nd - kd) * std::pow(cr * cr * d0 + sr * sr * d1, kd) + std::pow(d1, nd));
    const double coherence = nu * std::pow(cr, kd) * std::pow(o, nd) * std::cos(nd * phi);
    return mixed + populations + coherence;
}

}  // namespace su2w
