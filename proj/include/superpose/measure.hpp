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
#include <optional>

#include "superpose/bloch.hpp"
#include "superpose/superposition.hpp"

namespace superpose {

/// Monte Carlo area fraction with a 95% Wilson score interval.
struct FractionEstimate {
    double fraction = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    double ci95_lo = 0.0;
    double ci95_hi = 0.0;
};

FractionEstimate wilson_estimate(std::uint64_t hits, std::uint64_t samples);

/// Fraction of n uniform samples with |circle_residual| < eps. The band is a
/// spherical zone of height 2 eps, so its exact area fraction is eps whenever
/// |c| + eps <= 1. Throws DomainError unless eps > 0, n >= 1 and |c| <= 1.
FractionEstimate band_fraction(const SphereCircle &circ, double eps, std::size_t n, std::uint64_t seed);

/// eps when the band lies entirely on the sphere, nullopt when it is truncated.
std::optional<double> band_expectation(const SphereCircle &circ, double eps);

/// Fraction of n uniform samples psi with is_superposable(map, spec, psi, |0>, tol).
FractionEstimate superposable_fraction(const CPMap &map, const SuperpositionSpec &spec, double tol, std::size_t n,
                                       std::uint64_t seed);

}  // namespace superpose
