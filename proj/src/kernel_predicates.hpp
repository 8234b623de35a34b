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

#include <cmath>
#include <numbers>

#include "superpose/bloch.hpp"
#include "superpose/superposition.hpp"

// Per-point predicates shared by the serial and OpenMP kernels.

namespace superpose::kernels::detail {

inline bool in_band(const BlochPoint &p, const SphereCircle &circ, double eps) {
    return std::abs(circle_residual(p, circ)) < eps;
}

inline bool in_violation_band(const BlochPoint &p, double cos_g, double sin_g, double eps) {
    return std::abs(cos_g * p.x + sin_g * p.y) < eps;
}

inline bool accepts(const BlochPoint &p, const CPMap &map, const SuperpositionSpec &spec, const PureQubit &phi0,
                    double tol) {
    return is_superposable(map, spec, bloch_to_state(p), phi0, tol).superposable;
}

inline double grid_polar(std::size_t i, std::size_t grid_n) {
    return std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_n - 1);
}

inline double grid_azimuth(std::size_t j, std::size_t grid_n) {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_n);
}

/// Columns evaluated in row i: the poles collapse to one point.
inline std::size_t row_width(std::size_t i, std::size_t grid_n) {
    return (i == 0 || i + 1 == grid_n) ? 1 : grid_n;
}

inline PureQubit grid_state(std::size_t i, std::size_t j, std::size_t grid_n) {
    return PureQubit::from_angles(grid_polar(i, grid_n), grid_azimuth(j, grid_n));
}

}  // namespace superpose::kernels::detail
