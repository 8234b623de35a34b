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
#include <vector>

#include "superpose/bloch.hpp"
#include "superpose/linalg.hpp"

namespace superpose {

/// Weights (alpha, beta) of the requested superposition
/// alpha |psi> + beta e^{i theta} |phi0>. Both nonzero, |alpha|^2 + |beta|^2 = 1.
class SuperpositionSpec {
   public:
    SuperpositionSpec(Complex alpha, Complex beta, double tol = kDefaultTol);

    Complex alpha() const {
        return alpha_;
    }
    Complex beta() const {
        return beta_;
    }

   private:
    Complex alpha_;
    Complex beta_;
};

/// A single 2x4 Kraus operator acting on the (unknown, known) register and
/// producing one qubit. Valid only if M^dagger M <= I.
class KrausOperator {
   public:
    explicit KrausOperator(const CMatrix &m);

    const CMatrix &matrix() const {
        return m_;
    }

   private:
    CMatrix m_;
};

/// Nonempty list of Kraus operators with sum_k M_k^dagger M_k <= I.
class CPMap {
   public:
    explicit CPMap(std::vector<KrausOperator> ops);
    explicit CPMap(KrausOperator op) : CPMap(std::vector<KrausOperator>{std::move(op)}) {
    }

    const std::vector<KrausOperator> &ops() const {
        return ops_;
    }

   private:
    std::vector<KrausOperator> ops_;
};

/// Smallest eigenvalue of I - sum_k M_k^dagger M_k; non-negative (up to
/// rounding) for a trace-nonincreasing map.
double trace_nonincreasing_margin(const std::vector<KrausOperator> &ops);

/// Outcome of fitting out out^dagger against lambda |Psi(theta)><Psi(theta)|.
struct FitReport {
    std::optional<double> theta;   ///< in [0, 2 pi), present iff the fit passed
    std::optional<double> lambda;  ///< > 0, present iff the fit passed
    double residual_norm = 0.0;    ///< Frobenius norm at the optimum
    double success_prob = 0.0;     ///< squared norm of the Kraus output

    bool fitted() const {
        return theta.has_value();
    }
};

/// alpha psi + beta e^{i theta} phi0 (not normalized).
CVector target_vector(const SuperpositionSpec &spec, double theta, const PureQubit &psi, const PureQubit &phi0);

/// M (psi (x) phi0); its squared norm is the success probability.
CVector apply_kraus(const KrausOperator &k, const PureQubit &psi, const PureQubit &phi0);

/// Minimizes || out out^dagger - lambda |Psi(theta)><Psi(theta)| ||_F over
/// theta and lambda > 0.
///
/// For fixed theta the optimal lambda is |<Psi|out>|^2 / ||Psi||^4 and the
/// residual reduces to ||out||^4 - (|<Psi|out>|^2 / ||Psi||^2)^2, a ratio of
/// two first-order trigonometric polynomials in theta. Its stationary points
/// solve A cos(theta) + B sin(theta) + C = 0, which is done in closed form.
///
/// theta and lambda are reported iff residual < tol * max(1, ||out||^2). A zero
/// output yields an empty report with success_prob 0.
FitReport fit_phase(const CVector &out, const SuperpositionSpec &spec, const PureQubit &psi, const PureQubit &phi0,
                    double tol = kDefaultTol);

/// H = M (rho_psi (x) rho_phi0) M^dagger - lambda |Psi><Psi|. Throws
/// DomainError unless lambda > 0.
CMatrix residual_H(const KrausOperator &k, const SuperpositionSpec &spec, const PureQubit &psi,
                   const PureQubit &phi0, double lambda, double theta);

struct SuperposableResult {
    bool superposable = false;
    /// Aggregate: success_prob is the total over operators, residual_norm the
    /// worst operator, theta/lambda those of the first operator with nonzero
    /// output.
    FitReport report;
    std::vector<FitReport> per_operator;
};

/// Every operator must either annihilate the input or fit its own (theta,
/// lambda); at least one output must be nonzero.
SuperposableResult is_superposable(const CPMap &map, const SuperpositionSpec &spec, const PureQubit &psi,
                                   const PureQubit &phi0, double tol = kDefaultTol);

}  // namespace superpose
