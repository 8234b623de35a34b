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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "superpose/bloch.hpp"
#include "superpose/superposition.hpp"

// Data-parallel kernels behind the Monte Carlo estimators and the grid scan.
// Each kernel has an OpenMP version and a `_serial` reference version that
// shares no code path with it beyond the per-point predicate. Both consume
// the same sample substreams (see sample_sphere_block), so for identical
// arguments they return identical results.

namespace superpose::kernels {

struct HitCount {
    std::uint64_t hits = 0;
    std::uint64_t total = 0;

    bool operator==(const HitCount &) const = default;
};

/// Samples with |circle_residual| < eps.
HitCount band_hits(const SphereCircle &circ, double eps, std::size_t n, std::uint64_t seed);
HitCount band_hits_serial(const SphereCircle &circ, double eps, std::size_t n, std::uint64_t seed);

/// Samples psi for which is_superposable(map, spec, psi, |0>, tol) holds.
HitCount superposable_hits(const CPMap &map, const SuperpositionSpec &spec, double tol, std::size_t n,
                           std::uint64_t seed);
HitCount superposable_hits_serial(const CPMap &map, const SuperpositionSpec &spec, double tol, std::size_t n,
                                  std::uint64_t seed);

/// Samples with |cos(gamma) X + sin(gamma) Y| < eps.
HitCount violation_hits(double gamma, double eps, std::size_t n, std::uint64_t seed);
HitCount violation_hits_serial(double gamma, double eps, std::size_t n, std::uint64_t seed);

/// Grid of angle pairs: polar x_i = pi i / (grid_n - 1) for i in [0, grid_n)
/// and azimuth y_j = 2 pi j / grid_n. The two pole rows collapse to a single
/// point each. Accepted points come back in row-major order.
std::vector<BlochPoint> scan_grid(const CPMap &map, const SuperpositionSpec &spec, const PureQubit &phi0,
                                  std::size_t grid_n, double tol);
std::vector<BlochPoint> scan_grid_serial(const CPMap &map, const SuperpositionSpec &spec, const PureQubit &phi0,
                                         std::size_t grid_n, double tol);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace superpose::kernels
