// Copyright 2026 The superpose Authors
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

#include "superpose/synthesize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "superpose/error.hpp"

namespace superpose {

namespace {

constexpr double kOnCircleTol = 1e-9;
constexpr double kSingularTol = 1e-12;

CMatrix circle_operator(double mu, double nu) {
    CMatrix m(2, 4);
    m(0, 2) = std::polar(std::sin(mu / 2.0), nu);
    m(1, 2) = -std::cos(mu / 2.0);
    return m;
}

}  // namespace

SuperpositionChannel synthesize_channel(const SphereCircle &circ, bool canonicalize_input) {
    SphereCircle canon = circ;
    if (!circ.canonical || !in_canonical_form(circ)) {
        if (!canonicalize_input && !in_canonical_form(circ)) {
            throw DomainError("circle is not in canonical form (cos mu < 0) and canonicalization is disabled");
        }
        canon = canonicalize(circ);
    }
    if (std::abs(canon.c) > 1.0) {
        throw DomainError("empty locus: |c| > 1, the plane misses the Bloch sphere");
    }
    const double cos_mu = std::cos(canon.mu);
    const double denom = 2.0 + cos_mu - canon.c;
    const double beta_sq = (1.0 - canon.c) / denom;
    if (beta_sq <= 0.0) {
        throw DomainError("c = 1 makes beta vanish; the locus is a single tangent point");
    }
    const double alpha = std::sqrt((1.0 + cos_mu) / denom);
    const double beta = std::sqrt(beta_sq);

    const PureQubit output =
        PureQubit::normalized(std::sin(canon.mu / 2.0), std::polar(std::cos(canon.mu / 2.0), -(canon.nu + std::numbers::pi)));
    return SuperpositionChannel{
        KrausOperator(circle_operator(canon.mu, canon.nu)),
        SuperpositionSpec(alpha, beta),
        (1.0 + cos_mu) / (2.0 * alpha * alpha),
        canon,
        output,
    };
}

double phase_for_state(const SuperpositionChannel &ch, const PureQubit &psi) {
    const double off = circle_residual(state_to_bloch(psi), ch.circle);
    if (std::abs(off) > kOnCircleTol) {
        throw DomainError("state is off the channel's circle (residual " + std::to_string(off) + ")");
    }
    const CVector out = apply_kraus(ch.kraus, psi, ket0());
    const FitReport rep = fit_phase(out, ch.spec, psi, ket0(), 1e-6);
    if (rep.success_prob == 0.0) {
        return 0.0;
    }
    if (!rep.fitted()) {
        throw std::logic_error("phase fit failed for an on-circle state");
    }
    return *rep.theta;
}

std::optional<double> closed_form_phase(const SuperpositionChannel &ch, const PureQubit &psi) {
    const double mu = ch.circle.mu;
    const double x = psi.polar();
    const double delta = ch.circle.nu - psi.azimuth();
    const double sin_half_mu = std::sin(mu / 2.0);
    const double sin_half_x = std::sin(x / 2.0);
    const double sin_delta = std::sin(delta);
    if (std::abs(sin_half_mu) < kSingularTol || std::abs(std::cos(mu / 2.0)) < kSingularTol ||
        std::abs(sin_half_x) < kSingularTol || std::abs(sin_delta) < kSingularTol) {
        return std::nullopt;
    }
    const double cot_half_mu = std::cos(mu / 2.0) / sin_half_mu;
    const double cot_half_x = std::cos(x / 2.0) / sin_half_x;
    const double arg = cot_half_mu * cot_half_x / sin_delta + std::cos(delta) / sin_delta;
    return wrap_angle(-std::atan(arg) - 0.5 * std::numbers::pi);
}

double success_probability(const SuperpositionChannel &ch, const PureQubit &psi) {
    return apply_kraus(ch.kraus, psi, ket0()).norm_sq();
}

AlternateExample alternate_channel_example() {
    const double h = std::sqrt(2.0) / 2.0;
    CMatrix m(2, 4);
    m(0, 0) = h;
    m(1, 2) = -h;
    return AlternateExample{KrausOperator(m), SuperpositionSpec(-h, h), 0.0};
}

}  // namespace superpose
