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

#include <cmath>

#include "kernel_predicates.hpp"
#include "superpose/error.hpp"
#include "superpose/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superpose::kernels {

namespace {

/// Blocks of kSampleBlock points are distributed over threads; each thread
/// regenerates its blocks from (seed, block) so the sample set is independent
/// of the schedule.
template <class Pred>
HitCount count_blocks(std::size_t n, std::uint64_t seed, Pred pred) {
    const auto num_blocks = static_cast<std::int64_t>((n + kSampleBlock - 1) / kSampleBlock);
    std::uint64_t hits = 0;
#pragma omp parallel reduction(+ : hits)
    {
        std::vector<BlochPoint> buf(kSampleBlock);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < num_blocks; ++b) {
            const std::size_t start = static_cast<std::size_t>(b) * kSampleBlock;
            const std::size_t len = std::min(kSampleBlock, n - start);
            std::span<BlochPoint> block(buf.data(), len);
            sample_sphere_block(seed, static_cast<std::uint64_t>(b), block);
            for (const BlochPoint &p : block) {
                hits += pred(p) ? 1 : 0;
            }
        }
    }
    return {hits, n};
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

HitCount band_hits(const SphereCircle &circ, double eps, std::size_t n, std::uint64_t seed) {
    return count_blocks(n, seed, [&](const BlochPoint &p) { return detail::in_band(p, circ, eps); });
}

HitCount superposable_hits(const CPMap &map, const SuperpositionSpec &spec, double tol, std::size_t n,
                           std::uint64_t seed) {
    const PureQubit phi0 = ket0();
    return count_blocks(n, seed, [&](const BlochPoint &p) { return detail::accepts(p, map, spec, phi0, tol); });
}

HitCount violation_hits(double gamma, double eps, std::size_t n, std::uint64_t seed) {
    const double cg = std::cos(gamma);
    const double sg = std::sin(gamma);
    return count_blocks(n, seed, [&](const BlochPoint &p) { return detail::in_violation_band(p, cg, sg, eps); });
}

std::vector<BlochPoint> scan_grid(const CPMap &map, const SuperpositionSpec &spec, const PureQubit &phi0,
                                  std::size_t grid_n, double tol) {
    if (grid_n < 2) {
        throw DomainError("scan grid needs grid_n >= 2");
    }
    // One output row per polar index, concatenated afterwards in row order.
    std::vector<std::vector<BlochPoint>> rows(grid_n);
    const auto n_rows = static_cast<std::int64_t>(grid_n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t ii = 0; ii < n_rows; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < detail::row_width(i, grid_n); ++j) {
            const PureQubit psi = detail::grid_state(i, j, grid_n);
            if (is_superposable(map, spec, psi, phi0, tol).superposable) {
                rows[i].push_back(state_to_bloch(psi));
            }
        }
    }
    std::vector<BlochPoint> accepted;
    for (const auto &row : rows) {
        accepted.insert(accepted.end(), row.begin(), row.end());
    }
    return accepted;
}

}  // namespace superpose::kernels
