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

#include "superpose/superposition.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "superpose/error.hpp"

namespace superpose {

namespace {

// Outputs with squared norm at or below this are treated as annihilated.
constexpr double kZeroOutput = 1e-30;

// Eigenvalue slack for the trace-nonincreasing check.
constexpr double kPsdSlack = 1e-12;

double frobenius_residual(const CVector &out, const CVector &target, double lambda) {
    double s = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Complex h = out[i] * std::conj(out[j]) - lambda * target[i] * std::conj(target[j]);
            s += std::norm(h);
        }
    }
    return std::sqrt(s);
}

}  // namespace

SuperpositionSpec::SuperpositionSpec(Complex alpha, Complex beta, double tol) : alpha_(alpha), beta_(beta) {
    if (std::abs(alpha) == 0.0 || std::abs(beta) == 0.0) {
        throw DomainError("superposition weights must both be nonzero");
    }
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1.0) > tol) {
        throw DomainError("superposition weights must satisfy |alpha|^2+|beta|^2 = 1 (got " + std::to_string(n2) +
                          ")");
    }
}

double trace_nonincreasing_margin(const std::vector<KrausOperator> &ops) {
    CMatrix slack = CMatrix::identity(4);
    for (const KrausOperator &k : ops) {
        slack -= matmul(adjoint(k.matrix()), k.matrix());
    }
    return hermitian_eigenvalues(slack).front();
}

KrausOperator::KrausOperator(const CMatrix &m) : m_(m) {
    if (m.rows() != 2 || m.cols() != 4) {
        throw DomainError("Kraus operator must be 2x4");
    }
    if (trace_nonincreasing_margin({*this}) < -kPsdSlack) {
        throw DomainError("Kraus operator violates M^dagger M <= I");
    }
}

CPMap::CPMap(std::vector<KrausOperator> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw DomainError("CP map needs at least one Kraus operator");
    }
    if (trace_nonincreasing_margin(ops_) < -kPsdSlack) {
        throw DomainError("CP map violates sum M^dagger M <= I");
    }
}

CVector target_vector(const SuperpositionSpec &spec, double theta, const PureQubit &psi, const PureQubit &phi0) {
    const Complex b = spec.beta() * std::polar(1.0, theta);
    return CVector{spec.alpha() * psi.a0() + b * phi0.a0(), spec.alpha() * psi.a1() + b * phi0.a1()};
}

CVector apply_kraus(const KrausOperator &k, const PureQubit &psi, const PureQubit &phi0) {
    return matvec(k.matrix(), kron(psi.vec(), phi0.vec()));
}

FitReport fit_phase(const CVector &out, const SuperpositionSpec &spec, const PureQubit &psi, const PureQubit &phi0,
                    double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("fit_phase: tol must be positive");
    }
    if (out.dim() != 2) {
        throw DomainError("fit_phase: output must be a 2-vector");
    }
    FitReport report;
    const double out_sq = out.norm_sq();
    report.success_prob = out_sq;
    if (out_sq <= kZeroOutput) {
        report.success_prob = 0.0;
        return report;
    }

    const CVector u = spec.alpha() * psi.vec();
    const CVector v = spec.beta() * phi0.vec();

    // <Psi|out> = a + e^{-i theta} b,  ||Psi||^2 = R + S cos(theta - phi2).
    const Complex a = inner(u, out);
    const Complex b = inner(v, out);
    const Complex w = std::conj(a) * b;
    const Complex z = inner(u, v);
    const double p = std::norm(a) + std::norm(b);
    const double q = 2.0 * std::abs(w);
    const double omega = std::arg(w);
    const double r = u.norm_sq() + v.norm_sq();
    const double s = 2.0 * std::abs(z);
    const double phi2 = -std::arg(z);

    // d/dtheta [N/D] = 0  <=>  A cos(theta) + B sin(theta) + C = 0.
    const double coef_cos = q * r * std::sin(omega) - s * p * std::sin(phi2);
    const double coef_sin = -q * r * std::cos(omega) + s * p * std::cos(phi2);
    const double coef_const = q * s * std::sin(omega - phi2);

    std::array<double, 6> candidates{};
    std::size_t count = 0;
    const double amp = std::hypot(coef_cos, coef_sin);
    if (amp > 1e-300) {
        const double base = std::atan2(coef_sin, coef_cos);
        const double spread = std::acos(std::clamp(-coef_const / amp, -1.0, 1.0));
        candidates[count++] = base + spread;
        candidates[count++] = base - spread;
    }
    // Fallbacks cover a constant objective and targets that vanish at the
    // stationary phase.
    for (double t : {0.0, 0.5 * std::numbers::pi, std::numbers::pi, 1.5 * std::numbers::pi}) {
        candidates[count++] = t;
    }

    bool have = false;
    double best_theta = 0.0;
    double best_lambda = 0.0;
    double best_residual = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double theta = wrap_angle(candidates[i]);
        const CVector target = target_vector(spec, theta, psi, phi0);
        const double den = target.norm_sq();
        if (den <= 1e-300) {
            continue;
        }
        const double lambda = std::norm(inner(target, out)) / (den * den);
        const double res = frobenius_residual(out, target, lambda);
        if (!have || res < best_residual) {
            have = true;
            best_theta = theta;
            best_lambda = lambda;
            best_residual = res;
        }
    }
    if (!have) {
        // Psi(theta) = 0 at every probed phase; nothing to fit.
        report.residual_norm = std::sqrt(out_sq * out_sq);
        return report;
    }
    report.residual_norm = best_residual;
    if (best_lambda > 0.0 && best_residual < tol * std::max(1.0, out_sq)) {
        report.theta = best_theta;
        report.lambda = best_lambda;
    }
    return report;
}

CMatrix residual_H(const KrausOperator &k, const SuperpositionSpec &spec, const PureQubit &psi,
                   const PureQubit &phi0, double lambda, double theta) {
    if (!(lambda > 0.0)) {
        throw DomainError("residual_H: lambda must be positive");
    }
    const CVector out = apply_kraus(k, psi, phi0);
    const CVector target = target_vector(spec, theta, psi, phi0);
    return outer(out) - Complex(lambda) * outer(target);
}

SuperposableResult is_superposable(const CPMap &map, const SuperpositionSpec &spec, const PureQubit &psi,
                                   const PureQubit &phi0, double tol) {
    SuperposableResult result;
    result.per_operator.reserve(map.ops().size());
    bool all_fit = true;
    bool have_first = false;
    for (const KrausOperator &k : map.ops()) {
        FitReport rep = fit_phase(apply_kraus(k, psi, phi0), spec, psi, phi0, tol);
        result.report.success_prob += rep.success_prob;
        result.report.residual_norm = std::max(result.report.residual_norm, rep.residual_norm);
        if (rep.success_prob > 0.0) {
            all_fit = all_fit && rep.fitted();
            if (!have_first) {
                have_first = true;
                result.report.theta = rep.theta;
                result.report.lambda = rep.lambda;
            }
        }
        result.per_operator.push_back(rep);
    }
    result.superposable = all_fit && result.report.success_prob > 0.0;
    if (!result.superposable) {
        result.report.theta.reset();
        result.report.lambda.reset();
    }
    return result;
}

}  // namespace superpose
