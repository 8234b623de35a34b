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

#include "superpose/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "superpose/error.hpp"

namespace superpose {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// cos(mu) closer to zero than this counts as the equatorial tie.
constexpr double kCanonTieTol = 1e-12;

BlochPoint cross(const BlochPoint &a, const BlochPoint &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

BlochPoint scaled(const BlochPoint &a, double s) {
    return {a.x * s, a.y * s, a.z * s};
}

double unit_double(std::mt19937_64 &eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

double BlochPoint::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

double dot(const BlochPoint &a, const BlochPoint &b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    if (w >= kTwoPi) {
        w = 0.0;
    }
    return w;
}

PureQubit::PureQubit(Complex a0, Complex a1, double tol) {
    const double n2 = std::norm(a0) + std::norm(a1);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
        throw DomainError("qubit amplitudes are not normalized (|a0|^2+|a1|^2 = " + std::to_string(n2) + ")");
    }
    const double m0 = std::abs(a0);
    if (m0 > 0.0) {
        const Complex phase = std::conj(a0) / m0;
        a0_ = m0;
        a1_ = a1 * phase;
    } else {
        a0_ = 0.0;
        a1_ = std::abs(a1);
    }
}

PureQubit PureQubit::normalized(Complex a0, Complex a1) {
    const double n = std::sqrt(std::norm(a0) + std::norm(a1));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("cannot normalize the zero vector");
    }
    return PureQubit(a0 / n, a1 / n);
}

PureQubit PureQubit::from_angles(double polar, double azimuth) {
    return PureQubit(std::cos(polar / 2.0), std::polar(std::sin(polar / 2.0), -azimuth));
}

double PureQubit::polar() const {
    return 2.0 * std::atan2(std::abs(a1_), a0_.real());
}

double PureQubit::azimuth() const {
    if (a0_.real() == 0.0 || a1_ == Complex(0.0)) {
        return 0.0;
    }
    return wrap_angle(-std::arg(a1_));
}

PureQubit ket0() {
    return PureQubit(1.0, 0.0);
}

PureQubit ket1() {
    return PureQubit(0.0, 1.0);
}

BlochPoint state_to_bloch(const PureQubit &psi) {
    const Complex cross_term = std::conj(psi.a0()) * psi.a1();
    return {2.0 * cross_term.real(), -2.0 * cross_term.imag(), std::norm(psi.a0()) - std::norm(psi.a1())};
}

PureQubit bloch_to_state(const BlochPoint &p) {
    if (std::abs(p.norm() - 1.0) > 1e-9) {
        throw DomainError("Bloch point is not on the unit sphere");
    }
    // 2 a0 |a1| = sin x = rho; take the better-conditioned half from Z and the
    // other one from rho.
    const double rho = std::hypot(p.x, p.y);
    double m0 = 0.0;
    double m1 = 0.0;
    if (p.z >= 0.0) {
        m0 = std::sqrt((1.0 + p.z) / 2.0);
        m1 = rho / (2.0 * m0);
    } else {
        m1 = std::sqrt((1.0 - p.z) / 2.0);
        m0 = rho / (2.0 * m1);
    }
    const double y = (rho > 0.0) ? std::atan2(p.y, p.x) : 0.0;
    return PureQubit::normalized(m0, std::polar(m1, -y));
}

BlochPoint SphereCircle::normal() const {
    return {std::sin(mu) * std::cos(nu), std::sin(mu) * std::sin(nu), std::cos(mu)};
}

namespace {

SphereCircle from_unit_normal(BlochPoint n, double c) {
    bool flip = false;
    if (n.z < -kCanonTieTol) {
        flip = true;
    } else if (n.z <= kCanonTieTol) {
        const double lead = (std::abs(n.x) > kCanonTieTol) ? n.x : n.y;
        flip = lead < 0.0;
    }
    if (flip) {
        n = scaled(n, -1.0);
        c = -c;
    }
    SphereCircle out;
    out.mu = std::atan2(std::hypot(n.x, n.y), n.z);
    out.nu = wrap_angle(std::atan2(n.y, n.x));
    out.c = c;
    out.canonical = true;
    return out;
}

}  // namespace

SphereCircle circle_from_plane(double nx, double ny, double nz, double d) {
    const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw DomainError("plane normal must be nonzero and finite");
    }
    return from_unit_normal({nx / len, ny / len, nz / len}, d / len);
}

SphereCircle canonicalize(const SphereCircle &circ) {
    // Already canonical parameters pass through untouched, so canonicalize is
    // an exact fixpoint rather than one up to a rounding step.
    if (circ.mu >= 0.0 && circ.mu <= std::numbers::pi / 2.0 && circ.nu >= 0.0 && circ.nu < kTwoPi && in_canonical_form(circ)) {
        SphereCircle out = circ;
        out.canonical = true;
        return out;
    }
    return from_unit_normal(circ.normal(), circ.c);
}

bool in_canonical_form(const SphereCircle &circ) {
    const BlochPoint n = circ.normal();
    if (n.z > kCanonTieTol) {
        return true;
    }
    if (n.z < -kCanonTieTol) {
        return false;
    }
    const double lead = (std::abs(n.x) > kCanonTieTol) ? n.x : n.y;
    return lead > 0.0;
}

double circle_residual(const BlochPoint &p, const SphereCircle &circ) {
    return p.z * std::cos(circ.mu) + p.x * std::sin(circ.mu) * std::cos(circ.nu) +
           p.y * std::sin(circ.mu) * std::sin(circ.nu) + circ.c;
}

std::vector<BlochPoint> circle_points(const SphereCircle &circ, std::size_t n) {
    if (n == 0) {
        throw DomainError("circle_points: n must be positive");
    }
    if (std::abs(circ.c) > 1.0) {
        throw DomainError("circle_points: |c| > 1, the plane misses the sphere");
    }
    const BlochPoint normal = circ.normal();
    const BlochPoint helper = (std::abs(normal.z) < 0.9) ? BlochPoint{0.0, 0.0, 1.0} : BlochPoint{1.0, 0.0, 0.0};
    BlochPoint e1 = cross(normal, helper);
    e1 = scaled(e1, 1.0 / e1.norm());
    const BlochPoint e2 = cross(normal, e1);
    const BlochPoint center = scaled(normal, -circ.c);
    const double radius = std::sqrt(std::max(0.0, 1.0 - circ.c * circ.c));

    std::vector<BlochPoint> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        const double a = radius * std::cos(t);
        const double b = radius * std::sin(t);
        pts.push_back({center.x + a * e1.x + b * e2.x, center.y + a * e1.y + b * e2.y, center.z + a * e1.z + b * e2.z});
    }
    return pts;
}

void sample_sphere_block(std::uint64_t seed, std::uint64_t block, std::span<BlochPoint> out) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 eng(seq);
    for (BlochPoint &p : out) {
        const double z = 2.0 * unit_double(eng) - 1.0;
        const double phi = kTwoPi * unit_double(eng);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        p = {r * std::cos(phi), r * std::sin(phi), z};
    }
}

std::vector<BlochPoint> sample_sphere(std::size_t n, std::uint64_t seed) {
    std::vector<BlochPoint> pts(n);
    for (std::size_t start = 0, block = 0; start < n; start += kSampleBlock, ++block) {
        const std::size_t len = std::min(kSampleBlock, n - start);
        sample_sphere_block(seed, block, std::span<BlochPoint>(pts).subspan(start, len));
    }
    return pts;
}

}  // namespace superpose
