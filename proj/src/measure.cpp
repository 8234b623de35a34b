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

#include "superpose/measure.hpp"

#include <algorithm>
#include <cmath>

#include "superpose/error.hpp"
#include "superpose/kernels.hpp"

namespace superpose {

namespace {

void check_sampling(double eps, std::size_t n) {
    if (!(eps > 0.0)) {
        throw DomainError("eps must be positive");
    }
    if (n == 0) {
        throw DomainError("sample count must be at least 1");
    }
}

}  // namespace

FractionEstimate wilson_estimate(std::uint64_t hits, std::uint64_t samples) {
    FractionEstimate est;
    est.hits = hits;
    est.samples = samples;
    if (samples == 0) {
        return est;
    }
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double center = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
    est.fraction = p;
    // The Wilson bounds are exactly 0 and 1 at the extremes; pin them there.
    est.ci95_lo = hits == 0 ? 0.0 : std::max(0.0, center - half);
    est.ci95_hi = hits == samples ? 1.0 : std::min(1.0, center + half);
    return est;
}

FractionEstimate band_fraction(const SphereCircle &circ, double eps, std::size_t n, std::uint64_t seed) {
    check_sampling(eps, n);
    if (std::abs(circ.c) > 1.0) {
        throw DomainError("band_fraction: |c| > 1, the plane misses the sphere");
    }
    const kernels::HitCount hc = kernels::band_hits(circ, eps, n, seed);
    return wilson_estimate(hc.hits, hc.total);
}

std::optional<double> band_expectation(const SphereCircle &circ, double eps) {
    if (std::abs(circ.c) + eps <= 1.0) {
        return eps;
    }
    return std::nullopt;
}

FractionEstimate superposable_fraction(const CPMap &map, const SuperpositionSpec &spec, double tol, std::size_t n,
                                       std::uint64_t seed) {
    check_sampling(tol, n);
    const kernels::HitCount hc = kernels::superposable_hits(map, spec, tol, n, seed);
    return wilson_estimate(hc.hits, hc.total);
}

}  // namespace superpose
