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

#include <algorithm>
#include <cmath>

#include "kernel_predicates.hpp"
#include "superpose/error.hpp"
#include "superpose/kernels.hpp"

// Reference implementations: materialize the whole sample set, then count.

namespace superpose::kernels {

namespace {

template <class Pred>
HitCount count_all(std::size_t n, std::uint64_t seed, Pred pred) {
    const std::vector<BlochPoint> pts = sample_sphere(n, seed);
    HitCount out;
    out.total = pts.size();
    out.hits = static_cast<std::uint64_t>(std::count_if(pts.begin(), pts.end(), pred));
    return out;
}

}  // namespace

HitCount band_hits_serial(const SphereCircle &circ, double eps, std::size_t n, std::uint64_t seed) {
    return count_all(n, seed, [&](const BlochPoint &p) { return detail::in_band(p, circ, eps); });
}

HitCount superposable_hits_serial(const CPMap &map, const SuperpositionSpec &spec, double tol, std::size_t n,
                                  std::uint64_t seed) {
    const PureQubit phi0 = ket0();
    return count_all(n, seed, [&](const BlochPoint &p) { return detail::accepts(p, map, spec, phi0, tol); });
}

HitCount violation_hits_serial(double gamma, double eps, std::size_t n, std::uint64_t seed) {
    const double cg = std::cos(gamma);
    const double sg = std::sin(gamma);
    return count_all(n, seed, [&](const BlochPoint &p) { return detail::in_violation_band(p, cg, sg, eps); });
}

std::vector<BlochPoint> scan_grid_serial(const CPMap &map, const SuperpositionSpec &spec, const PureQubit &phi0,
                                         std::size_t grid_n, double tol) {
    if (grid_n < 2) {
        throw DomainError("scan grid needs grid_n >= 2");
    }
    std::vector<BlochPoint> accepted;
    for (std::size_t i = 0; i < grid_n; ++i) {
        for (std::size_t j = 0; j < detail::row_width(i, grid_n); ++j) {
            const PureQubit psi = detail::grid_state(i, j, grid_n);
            if (is_superposable(map, spec, psi, phi0, tol).superposable) {
                accepted.push_back(state_to_bloch(psi));
            }
        }
    }
    return accepted;
}

}  // namespace superpose::kernels
