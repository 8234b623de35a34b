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

#include <cstdint>
#include <optional>

#include "superpose/bloch.hpp"
#include "superpose/linalg.hpp"
#include "superpose/measure.hpp"
#include "superpose/superposition.hpp"

namespace superpose {

/// Hypothetical protocol superposing inputs with a fixed state |2> orthogonal
/// to span{|0>, |1>}:
///   |0> -> alpha|0> + beta e^{i theta0}|2>,  |1> -> alpha|1> + beta e^{i theta1}|2>.
class QuditProtocol {
   public:
    QuditProtocol(SuperpositionSpec spec, double theta0, double theta1)
        : spec_(spec), theta0_(theta0), theta1_(theta1) {
    }

    const SuperpositionSpec &spec() const {
        return spec_;
    }
    double theta0() const {
        return theta0_;
    }
    double theta1() const {
        return theta1_;
    }
    double gamma() const {
        return theta1_ - theta0_;
    }

   private:
    SuperpositionSpec spec_;
    double theta0_;
    double theta1_;
};

/// Columns |Psi0>, |Psi1>, |Psi> in the basis (|0>, |1>, |2>), where
/// |Psi> = alpha psi + beta e^{i theta_psi}|2>.
CMatrix dependence_matrix(const QuditProtocol &p, const PureQubit &psi, double theta_psi);

struct DependenceCheck {
    bool dependent = false;
    /// |cos(x/2) + sin(x/2) e^{i(gamma - y)}|
    double modulus = 0.0;
    /// theta_psi that makes the three outputs linearly dependent, when one exists.
    std::optional<double> witness_theta;
};

/// The outputs can be made linearly dependent iff the modulus equals 1
/// (within tol); the witness is theta0 + arg(cos(x/2) + sin(x/2) e^{i(gamma - y)}).
DependenceCheck is_dependent(const QuditProtocol &p, const PureQubit &psi, double tol = kDefaultTol);

/// cos(gamma) X + sin(gamma) Y: zero exactly on the states with dependent outputs.
double violation_residual(double gamma, const BlochPoint &p);

/// The great circle cos(gamma) X + sin(gamma) Y = 0 through both poles, canonical.
SphereCircle violation_circle(const QuditProtocol &p);

/// Fraction of n uniform samples with |violation_residual| < eps. Throws
/// DomainError unless eps > 0 and n >= 1.
FractionEstimate violation_fraction(const QuditProtocol &p, double eps, std::size_t n, std::uint64_t seed);

}  // namespace superpose
