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

#include <optional>

#include "superpose/bloch.hpp"
#include "superpose/superposition.hpp"

namespace superpose {

/// Explicit single-operator channel that superposes every state on `circle`
/// with |0>:
///   M0 = [[0, 0, sin(mu/2) e^{i nu}, 0], [0, 0, -cos(mu/2), 0]]
///   alpha = sqrt((1 + cos mu) / (2 + cos mu - c)), beta = sqrt((1 - c) / (2 + cos mu - c))
///   lambda = (1 + cos mu) / (2 alpha^2)
/// Every accepted input is sent to the fixed state
///   sin(mu/2)|0> - e^{-i nu} cos(mu/2)|1>,
/// the antipode of the circle's normal on the Bloch sphere.
struct SuperpositionChannel {
    KrausOperator kraus;
    SuperpositionSpec spec;
    double lambda;
    SphereCircle circle;  ///< canonical
    PureQubit output_state;
};

/// Builds the channel for `circ`. A non-canonical circle is canonicalized
/// first unless `canonicalize_input` is false, in which case it is rejected.
/// Throws DomainError for |c| > 1 and for c = 1, where beta vanishes.
SuperpositionChannel synthesize_channel(const SphereCircle &circ, bool canonicalize_input = true);

/// The phase theta that makes the channel output proportional to
/// alpha psi + beta e^{i theta} |0>, found by phase matching. Returns 0 when
/// the output vanishes (psi = |0>). Throws DomainError when psi is off the
/// circle by more than 1e-9.
double phase_for_state(const SuperpositionChannel &ch, const PureQubit &psi);

/// theta = -arctan(cot(mu/2) cot(x/2) csc(nu - y) + cot(nu - y)) - pi/2, where
/// defined (mu not 0 or pi, x != 0, sin(nu - y) != 0). Agrees with
/// phase_for_state modulo pi; the arctan branch loses the remaining sign.
std::optional<double> closed_form_phase(const SuperpositionChannel &ch, const PureQubit &psi);

/// ||M0 (psi (x) |0>)||^2 = sin^2(x/2), for any psi.
double success_probability(const SuperpositionChannel &ch, const PureQubit &psi);

/// Second channel for the ring Z = -1/2:
///   M = [[sqrt2/2, 0, 0, 0], [0, 0, -sqrt2/2, 0]],  alpha = -sqrt2/2, beta = sqrt2/2, theta = 0.
/// Success probability 1/2 on the ring; unlike synthesize_channel the output
/// depends on the input's azimuth.
struct AlternateExample {
    KrausOperator kraus;
    SuperpositionSpec spec;
    double theta;
};

AlternateExample alternate_channel_example();

}  // namespace superpose
