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

#include "superpose/qudit.hpp"

#include <cmath>

#include "superpose/error.hpp"
#include "superpose/kernels.hpp"

namespace superpose {

CMatrix dependence_matrix(const QuditProtocol &p, const PureQubit &psi, double theta_psi) {
    const Complex alpha = p.spec().alpha();
    const Complex beta = p.spec().beta();
    CMatrix m(3, 3);
    m(0, 0) = alpha;
    m(2, 0) = beta * std::polar(1.0, p.theta0());
    m(1, 1) = alpha;
    m(2, 1) = beta * std::polar(1.0, p.theta1());
    m(0, 2) = alpha * psi.a0();
    m(1, 2) = alpha * psi.a1();
    m(2, 2) = beta * std::polar(1.0, theta_psi);
    return m;
}

DependenceCheck is_dependent(const QuditProtocol &p, const PureQubit &psi, double tol) {
    // In canonical form a0 = cos(x/2) and a1 = e^{-iy} sin(x/2), so
    // cos(x/2) + sin(x/2) e^{i(gamma - y)} = a0 + a1 e^{i gamma}.
    const Complex w = psi.a0() + psi.a1() * std::polar(1.0, p.gamma());
    DependenceCheck out;
    out.modulus = std::abs(w);
    out.dependent = std::abs(out.modulus - 1.0) < tol;
    if (out.dependent) {
        out.witness_theta = wrap_angle(p.theta0() + std::arg(w));
    }
    return out;
}

double violation_residual(double gamma, const BlochPoint &p) {
    return std::cos(gamma) * p.x + std::sin(gamma) * p.y;
}

SphereCircle violation_circle(const QuditProtocol &p) {
    return circle_from_plane(std::cos(p.gamma()), std::sin(p.gamma()), 0.0, 0.0);
}

FractionEstimate violation_fraction(const QuditProtocol &p, double eps, std::size_t n, std::uint64_t seed) {
    if (!(eps > 0.0)) {
        throw DomainError("eps must be positive");
    }
    if (n == 0) {
        throw DomainError("sample count must be at least 1");
    }
    const kernels::HitCount hc = kernels::violation_hits(p.gamma(), eps, n, seed);
    return wilson_estimate(hc.hits, hc.total);
}

}  // namespace superpose
