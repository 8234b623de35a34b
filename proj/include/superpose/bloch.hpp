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
#include <span>
#include <vector>

#include "superpose/linalg.hpp"

namespace superpose {

/// Point on the unit sphere in (X, Y, Z) order.
struct BlochPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double norm() const;
};

double dot(const BlochPoint &a, const BlochPoint &b);

/// Normalized qubit state a0|0> + a1|1>, stored in canonical global phase:
/// a0 real and non-negative, and a1 = 1 when a0 = 0.
///
/// Angle view: a0 = cos(x/2), a1 = exp(-i y) sin(x/2) with x in [0, pi],
/// y in [0, 2 pi). Note the minus sign in the azimuthal phase. At the south
/// pole y is defined as 0.
class PureQubit {
   public:
    /// Throws DomainError unless |a0|^2 + |a1|^2 = 1 within tol.
    PureQubit(Complex a0, Complex a1, double tol = kDefaultTol);

    /// Rescales (a0, a1) to unit norm first. Throws DomainError on the zero vector.
    static PureQubit normalized(Complex a0, Complex a1);
    static PureQubit from_angles(double polar, double azimuth);

    Complex a0() const {
        return a0_;
    }
    Complex a1() const {
        return a1_;
    }
    /// The polar angle x.
    double polar() const;
    /// The azimuth y, with a1 proportional to exp(-i y).
    double azimuth() const;

    CVector vec() const {
        return CVector{a0_, a1_};
    }

   private:
    Complex a0_;
    Complex a1_;
};

PureQubit ket0();
PureQubit ket1();

BlochPoint state_to_bloch(const PureQubit &psi);

/// Throws DomainError unless the point has unit norm within 1e-9.
PureQubit bloch_to_state(const BlochPoint &p);

/// Intersection of the plane
///     Z cos(mu) + X sin(mu) cos(nu) + Y sin(mu) sin(nu) + c = 0
/// with the unit sphere. (mu, nu, c) and (pi - mu, nu + pi, -c) describe the
/// same circle; the canonical representative has cos(mu) > 0, or cos(mu) = 0
/// with the first nonzero of the (X, Y) normal components positive.
struct SphereCircle {
    double mu = 0.0;
    double nu = 0.0;
    double c = 0.0;
    bool canonical = false;

    /// Unit normal in (X, Y, Z) order.
    BlochPoint normal() const;
};

/// Builds the canonical circle for the plane nx X + ny Y + nz Z + d = 0 after
/// scaling the normal to unit length. Throws DomainError for a zero normal.
SphereCircle circle_from_plane(double nx, double ny, double nz, double d);

SphereCircle canonicalize(const SphereCircle &circ);

/// Checks the canonical-representative condition on (mu, nu) directly,
/// regardless of the stored flag.
bool in_canonical_form(const SphereCircle &circ);

/// Z cos(mu) + X sin(mu) cos(nu) + Y sin(mu) sin(nu) + c.
double circle_residual(const BlochPoint &p, const SphereCircle &circ);

/// n points equally spaced in angle around the circle. A tangent plane
/// (|c| = 1) yields its single contact point n times. Throws DomainError for
/// |c| > 1 or n = 0.
std::vector<BlochPoint> circle_points(const SphereCircle &circ, std::size_t n);

/// Samples are produced in independent substreams of this many points; the
/// k-th block is seeded from (seed, k) alone so blocks can be generated in any
/// order or in parallel.
inline constexpr std::size_t kSampleBlock = 4096;

/// Fills out with the first out.size() points of substream `block`.
void sample_sphere_block(std::uint64_t seed, std::uint64_t block, std::span<BlochPoint> out);

/// Area-uniform points: Z uniform on [-1, 1], azimuth uniform on [0, 2 pi).
std::vector<BlochPoint> sample_sphere(std::size_t n, std::uint64_t seed);

/// Wraps an angle into [0, 2 pi).
double wrap_angle(double a);

}  // namespace superpose
