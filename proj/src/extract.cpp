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

#include "superpose/extract.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "superpose/error.hpp"
#include "superpose/kernels.hpp"

namespace superpose {

namespace {

constexpr double kEntryTol = 1e-9;

}  // namespace

Extraction extract_circle(const KrausOperator &k, const SuperpositionSpec &spec) {
    const CMatrix &m = k.matrix();
    const Complex a11 = m(0, 0);
    const Complex a13 = m(0, 2);
    const Complex a21 = m(1, 0);
    const Complex a23 = m(1, 2);
    if (std::abs(a21) >= kEntryTol) {
        throw DomainError("channel cannot superpose |0> with |0> (a21 != 0)");
    }
    if (std::abs(a23) <= kEntryTol) {
        throw DomainError("lambda undefined: a23 = 0");
    }

    ExtractionTrace t;
    t.lambda = std::norm(a23) / std::norm(spec.alpha());
    const Complex d1 = a11 - a23;
    t.r1 = std::abs(d1);
    t.gamma1 = std::arg(d1);
    t.r2 = std::abs(a13);
    t.gamma2 = std::arg(a13);
    t.gamma = t.gamma2 - t.gamma1;
    t.A = 0.5 * (t.r1 * t.r1 - t.r2 * t.r2);
    t.B = t.r1 * t.r2 * std::cos(t.gamma);
    t.C = t.r1 * t.r2 * std::sin(t.gamma);
    t.D = 0.5 * (t.r1 * t.r1 + t.r2 * t.r2) - std::norm(a23 * spec.beta() / spec.alpha());

    const double len = std::sqrt(t.A * t.A + t.B * t.B + t.C * t.C);
    if (len < 1e-12) {
        throw DomainError("no circle: the modulus condition is unsatisfiable (A = B = C = 0)");
    }
    if (std::abs(t.D) / len > 1.0 + 1e-12) {
        throw DomainError("empty locus: the plane misses the Bloch sphere");
    }
    SphereCircle circ = circle_from_plane(t.B, t.C, t.A, t.D);
    circ.c = std::clamp(circ.c, -1.0, 1.0);
    return {circ, t};
}

std::vector<Extraction> extract_circles(const CPMap &map, const SuperpositionSpec &spec) {
    std::vector<Extraction> out;
    out.reserve(map.ops().size());
    for (const KrausOperator &k : map.ops()) {
        out.push_back(extract_circle(k, spec));
    }
    return out;
}

std::vector<BlochPoint> scan_superposable(const CPMap &map, const SuperpositionSpec &spec, std::size_t grid_n,
                                          double tol, const PureQubit &phi0) {
    if (!(tol > 0.0)) {
        throw DomainError("scan: tol must be positive");
    }
    return kernels::scan_grid(map, spec, phi0, grid_n, tol);
}

PlaneFit fit_plane(std::span<const BlochPoint> points) {
    if (points.size() < 3) {
        throw DomainError("fit_plane needs at least 3 points");
    }
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (const BlochPoint &p : points) {
        centroid += Eigen::Vector3d(p.x, p.y, p.z);
    }
    centroid /= static_cast<double>(points.size());
    Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
    for (const BlochPoint &p : points) {
        const Eigen::Vector3d d = Eigen::Vector3d(p.x, p.y, p.z) - centroid;
        scatter += d * d.transpose();
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(scatter);
    const Eigen::Vector3d ev = eig.eigenvalues();  // ascending
    const Eigen::Vector3d n = eig.eigenvectors().col(0);

    PlaneFit fit;
    fit.degenerate = !(ev(2) > 0.0) || ev(1) <= 1e-14 * ev(2);
    fit.circle = circle_from_plane(n.x(), n.y(), n.z(), -n.dot(centroid));
    for (const BlochPoint &p : points) {
        fit.max_residual = std::max(fit.max_residual, std::abs(circle_residual(p, fit.circle)));
    }
    return fit;
}

}  // namespace superpose
