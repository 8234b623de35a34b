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

#pragma once

#include <span>
#include <vector>

#include "superpose/bloch.hpp"
#include "superpose/superposition.hpp"

namespace superpose {

/// Intermediate quantities of the circle derivation for one Kraus operator
/// with known state |0>:
///   lambda = |a23|^2 / |alpha|^2
///   r1 e^{i gamma1} = a11 - a23,  r2 e^{i gamma2} = a13,  gamma = gamma2 - gamma1
///   A = (r1^2 - r2^2) / 2,  B = r1 r2 cos(gamma),  C = r1 r2 sin(gamma)
///   D = (r1^2 + r2^2) / 2 - |a23 beta / alpha|^2
/// and the locus is A Z + B X + C Y + D = 0.
struct ExtractionTrace {
    double lambda = 0.0;
    double r1 = 0.0;
    double gamma1 = 0.0;
    double r2 = 0.0;
    double gamma2 = 0.0;
    double gamma = 0.0;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

struct Extraction {
    SphereCircle circle;  ///< canonical
    ExtractionTrace trace;
};

/// Closed-form circle of states superposable with |0> under a single Kraus
/// operator. Requires a21 = 0 and a23 != 0 (both within 1e-9); throws
/// DomainError otherwise, or when the plane is degenerate or misses the sphere.
Extraction extract_circle(const KrausOperator &k, const SuperpositionSpec &spec);

/// One extraction per operator; the acceptance region of the map is the
/// intersection of the per-operator loci.
std::vector<Extraction> extract_circles(const CPMap &map, const SuperpositionSpec &spec);

/// Evaluates is_superposable on the kernels::scan_grid lattice (grid_n polar
/// rows including both poles, grid_n azimuths) and returns accepted points in
/// row-major order. Runs in parallel; see kernels::scan_grid_serial for the
/// reference.
std::vector<BlochPoint> scan_superposable(const CPMap &map, const SuperpositionSpec &spec, std::size_t grid_n,
                                          double tol, const PureQubit &phi0 = ket0());

struct PlaneFit {
    SphereCircle circle;  ///< canonical
    double max_residual = 0.0;
    /// Points identical or collinear: the plane is not determined.
    bool degenerate = false;
};

/// Total least-squares plane through the points (unit normal, free offset).
/// Throws DomainError for fewer than 3 points.
PlaneFit fit_plane(std::span<const BlochPoint> points);

}  // namespace superpose
