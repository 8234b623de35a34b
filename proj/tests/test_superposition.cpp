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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "superpose/error.hpp"
#include "superpose/superposition.hpp"

using namespace superpose;
using oracle::kPi;

namespace {

constexpr double kS2 = 0.70710678118654752440;
constexpr double kR3h = 0.86602540378443864676;

KrausOperator ring_op() {
    CMatrix m(2, 4);
    m(1, 2) = -1.0;
    return KrausOperator(m);
}

KrausOperator alternate_op() {
    CMatrix m(2, 4);
    m(0, 0) = kS2;
    m(1, 2) = -kS2;
    return KrausOperator(m);
}

PureQubit ring_state(double y) {
    return PureQubit(0.5, std::polar(kR3h, -y));
}

CMatrix random_contraction(std::mt19937_64 &rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix m(2, 4);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m(r, c) = {n(rng), n(rng)};
        }
    }
    const double smax = singular_values(m).front();
    return Complex(scale / smax) * m;
}

SuperpositionSpec random_spec(std::mt19937_64 &rng) {
    const double a = oracle::uniform(rng, 0.05, kPi / 2.0 - 0.05);
    return SuperpositionSpec(std::polar(std::cos(a), oracle::uniform(rng, 0.0, 2.0 * kPi)),
                             std::polar(std::sin(a), oracle::uniform(rng, 0.0, 2.0 * kPi)));
}

}  // namespace

TEST(SuperpositionSpec, Validation) {
    EXPECT_THROW(SuperpositionSpec(1.0, 0.0), DomainError);
    EXPECT_THROW(SuperpositionSpec(0.5, 0.5), DomainError);
    EXPECT_NO_THROW(SuperpositionSpec(Complex(0.0, kS2), -kS2));
}

TEST(KrausOperator, Validation) {
    EXPECT_THROW(KrausOperator(CMatrix(2, 2)), DomainError);
    CMatrix big(2, 4);
    big(0, 0) = 1.01;
    EXPECT_THROW(KrausOperator{big}, DomainError);
    // Two operators that are each fine but together exceed I.
    CMatrix a(2, 4);
    a(0, 0) = 0.8;
    EXPECT_THROW(CPMap(std::vector<KrausOperator>{KrausOperator(a), KrausOperator(a)}), DomainError);
    EXPECT_THROW(CPMap(std::vector<KrausOperator>{}), DomainError);
    EXPECT_NEAR(trace_nonincreasing_margin({ring_op()}), 0.0, 1e-15);
}

TEST(TargetVector, Examples) {
    const SuperpositionSpec half(kS2, kS2);
    const CVector t = target_vector(half, 0.0, ket0(), ket0());
    EXPECT_NEAR(std::abs(t[0] - std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t[1]), 0.0, 1e-15);

    const SuperpositionSpec ring_spec(std::sqrt(0.8), std::sqrt(0.2));
    for (double y : {0.0, 1.0, 4.0}) {
        const CVector tp = target_vector(ring_spec, kPi, ring_state(y), ket0());
        EXPECT_NEAR(std::abs(tp[0]), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(tp[1] - std::sqrt(0.8) * std::polar(kR3h, -y)), 0.0, 1e-15);

        const SuperpositionSpec alt(-kS2, kS2);
        const CVector ta = target_vector(alt, 0.0, ring_state(y), ket0());
        EXPECT_NEAR(std::abs(ta[0] - std::sqrt(2.0) / 4.0), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(ta[1] + std::polar(std::sqrt(6.0) / 4.0, -y)), 0.0, 1e-15);
    }
}

TEST(ApplyKraus, Examples) {
    for (double y : {0.0, 0.5, 3.0}) {
        const CVector o = apply_kraus(ring_op(), ring_state(y), ket0());
        EXPECT_NEAR(std::abs(o[0]), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(o[1] + std::polar(kR3h, -y)), 0.0, 1e-15);
        EXPECT_NEAR(o.norm_sq(), 0.75, 1e-15);

        const CVector a = apply_kraus(alternate_op(), ring_state(y), ket0());
        EXPECT_NEAR(std::abs(a[0] - std::sqrt(2.0) / 4.0), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(a[1] + std::polar(std::sqrt(6.0) / 4.0, -y)), 0.0, 1e-15);
        EXPECT_NEAR(a.norm_sq(), 0.5, 1e-15);
    }
    EXPECT_EQ(apply_kraus(ring_op(), ket0(), ket0()).norm_sq(), 0.0);
}

TEST(FitPhase, Examples) {
    const SuperpositionSpec ring_spec(std::sqrt(0.8), std::sqrt(0.2));
    for (double y : {0.0, 1.3, 5.0}) {
        const PureQubit psi = ring_state(y);
        const FitReport r = fit_phase(apply_kraus(ring_op(), psi, ket0()), ring_spec, psi, ket0());
        ASSERT_TRUE(r.fitted());
        EXPECT_NEAR(*r.theta, kPi, 1e-12);
        EXPECT_NEAR(*r.lambda, 1.25, 1e-12);
        EXPECT_LT(r.residual_norm, 1e-12);
        EXPECT_NEAR(r.success_prob, 0.75, 1e-15);

        const SuperpositionSpec alt(-kS2, kS2);
        const FitReport ra = fit_phase(apply_kraus(alternate_op(), psi, ket0()), alt, psi, ket0());
        ASSERT_TRUE(ra.fitted());
        EXPECT_LT(oracle::angle_diff(*ra.theta, 0.0), 1e-12);
        EXPECT_LT(ra.residual_norm, 1e-12);
    }

    const FitReport none = fit_phase(CVector{1.0, 0.0}, SuperpositionSpec(kS2, kS2), ket1(), ket0());
    EXPECT_FALSE(none.fitted());
    EXPECT_FALSE(none.lambda.has_value());
    EXPECT_GT(none.residual_norm, 0.1);

    const FitReport zero = fit_phase(CVector{0.0, 0.0}, ring_spec, ket0(), ket0());
    EXPECT_FALSE(zero.fitted());
    EXPECT_EQ(zero.success_prob, 0.0);
    EXPECT_EQ(zero.residual_norm, 0.0);
    EXPECT_THROW(fit_phase(CVector{0.0, 0.0}, ring_spec, ket0(), ket0(), 0.0), DomainError);
}

TEST(FitPhase, MatchesBruteForceGrid) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 2000; ++t) {
        const SuperpositionSpec spec = random_spec(rng);
        const PureQubit psi = oracle::random_qubit(rng);
        const PureQubit phi0 = (t % 2 == 0) ? ket0() : oracle::random_qubit(rng);
        const KrausOperator k(random_contraction(rng, oracle::uniform(rng, 0.1, 1.0)));
        const CVector out = apply_kraus(k, psi, phi0);
        const FitReport r = fit_phase(out, spec, psi, phi0);
        const oracle::GridMin g = oracle::brute_force_fit(out, spec, psi, phi0);
        EXPECT_NEAR(r.residual_norm, g.value, 1e-6) << "trial " << t;
        // The closed form is never worse than the grid.
        EXPECT_LE(r.residual_norm, g.grid_value + 1e-12);
    }
}

TEST(FitPhase, BruteForceAgreesOnConstructedFits) {
    // Outputs built as exact multiples of a target vector: the fit must find
    // the planted phase, and the grid oracle must agree on the optimum.
    std::mt19937_64 rng(32);
    for (int t = 0; t < 1000; ++t) {
        const SuperpositionSpec spec = random_spec(rng);
        const PureQubit psi = oracle::random_qubit(rng);
        const PureQubit phi0 = oracle::random_qubit(rng);
        const double theta = oracle::uniform(rng, 0.0, 2.0 * kPi);
        const double scale = oracle::uniform(rng, 0.1, 1.0);
        const Complex ph = std::polar(scale, oracle::uniform(rng, 0.0, 2.0 * kPi));
        const CVector out = ph * target_vector(spec, theta, psi, phi0);
        if (out.norm() < 1e-3) {
            continue;
        }
        const FitReport r = fit_phase(out, spec, psi, phi0);
        ASSERT_TRUE(r.fitted()) << "trial " << t;
        EXPECT_LT(oracle::angle_diff(*r.theta, theta), 1e-9);
        EXPECT_NEAR(*r.lambda, scale * scale, 1e-9);
        const oracle::GridMin g = oracle::brute_force_fit(out, spec, psi, phi0);
        EXPECT_LT(g.value, 1e-6);
        EXPECT_LT(oracle::angle_diff(g.arg, theta), 1e-4);
    }
}

TEST(FitPhase, GlobalPhaseInvariance) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 500; ++t) {
        const SuperpositionSpec spec = random_spec(rng);
        const PureQubit psi = oracle::random_qubit(rng);
        const KrausOperator k(random_contraction(rng));
        const CVector out = apply_kraus(k, psi, ket0());
        const CVector rotated = std::polar(1.0, oracle::uniform(rng, 0.0, 2.0 * kPi)) * out;
        const FitReport a = fit_phase(out, spec, psi, ket0(), 1e-3);
        const FitReport b = fit_phase(rotated, spec, psi, ket0(), 1e-3);
        EXPECT_NEAR(a.residual_norm, b.residual_norm, 1e-12);
        EXPECT_NEAR(a.success_prob, b.success_prob, 1e-14);
        ASSERT_EQ(a.fitted(), b.fitted());
        if (a.fitted()) {
            EXPECT_LT(oracle::angle_diff(*a.theta, *b.theta), 1e-9);
            EXPECT_NEAR(*a.lambda, *b.lambda, 1e-12);
        }
    }
}

TEST(ResidualH, Examples) {
    const SuperpositionSpec ring_spec(std::sqrt(0.8), std::sqrt(0.2));
    const CMatrix h = residual_H(ring_op(), ring_spec, ring_state(0.9), ket0(), 1.25, kPi);
    EXPECT_LT(h.frobenius_norm(), 1e-12);

    // Zero output: H = -lambda |Psi><Psi|.
    const CMatrix h0 = residual_H(ring_op(), ring_spec, ket0(), ket0(), 1.25, kPi);
    const CMatrix want = Complex(-1.25) * outer(target_vector(ring_spec, kPi, ket0(), ket0()));
    EXPECT_TRUE(approx_equal(h0, want, 1e-15));
    EXPECT_GT(h0.frobenius_norm(), 0.1);

    EXPECT_THROW(residual_H(ring_op(), ring_spec, ket0(), ket0(), 0.0, 0.0), DomainError);
}

TEST(ResidualH, PlusTargetIsRankOneProjector) {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 300; ++t) {
        const SuperpositionSpec spec = random_spec(rng);
        const PureQubit psi = oracle::random_qubit(rng);
        const PureQubit phi0 = oracle::random_qubit(rng);
        const KrausOperator k(random_contraction(rng));
        const CMatrix h = residual_H(k, spec, psi, phi0, 1.0, 0.0);
        EXPECT_TRUE(is_hermitian(h));
        const CMatrix p = h + outer(target_vector(spec, 0.0, psi, phi0));
        const auto ev = hermitian_eigenvalues(p);
        EXPECT_NEAR(ev[0], 0.0, 1e-12);
        EXPECT_GE(ev[1], -1e-12);
        // Hand-expanded entries for |0> as the known state.
        if (t % 3 == 0) {
            const CMatrix hz = residual_H(k, spec, psi, ket0(), 0.7, 1.1);
            const CMatrix &m = k.matrix();
            const Complex o0 = m(0, 0) * psi.a0() + m(0, 2) * psi.a1();
            const Complex o1 = m(1, 0) * psi.a0() + m(1, 2) * psi.a1();
            const Complex t0 = spec.alpha() * psi.a0() + spec.beta() * std::polar(1.0, 1.1);
            const Complex t1 = spec.alpha() * psi.a1();
            EXPECT_NEAR(std::abs(hz(0, 0) - (std::norm(o0) - 0.7 * std::norm(t0))), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(hz(0, 1) - (o0 * std::conj(o1) - 0.7 * t0 * std::conj(t1))), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(hz(1, 0) - std::conj(hz(0, 1))), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(hz(1, 1) - (std::norm(o1) - 0.7 * std::norm(t1))), 0.0, 1e-12);
        }
    }
}

TEST(SuperpositionProperties, ResidualHMatchesReport) {
    std::mt19937_64 rng(35);
    int fitted = 0;
    for (int t = 0; t < 1000; ++t) {
        const SuperpositionSpec spec = random_spec(rng);
        const PureQubit psi = oracle::random_qubit(rng);
        const KrausOperator k(random_contraction(rng));
        const FitReport r = fit_phase(apply_kraus(k, psi, ket0()), spec, psi, ket0(), 10.0);
        if (!r.fitted()) {
            continue;
        }
        ++fitted;
        const CMatrix h = residual_H(k, spec, psi, ket0(), *r.lambda, *r.theta);
        EXPECT_NEAR(h.frobenius_norm(), r.residual_norm, 1e-12);
    }
    EXPECT_GT(fitted, 900);
}

TEST(SuperpositionProperties, SuccessProbabilityIsTrace) {
    std::mt19937_64 rng(36);
    for (int t = 0; t < 500; ++t) {
        const PureQubit psi = oracle::random_qubit(rng);
        const PureQubit phi0 = oracle::random_qubit(rng);
        const KrausOperator k(random_contraction(rng));
        const double p = apply_kraus(k, psi, phi0).norm_sq();
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0 + 1e-12);
        const CMatrix mm = matmul(adjoint(k.matrix()), k.matrix());
        const CMatrix rho = outer(kron(psi.vec(), phi0.vec()));
        const CMatrix prod = matmul(mm, rho);
        Complex tr = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            tr += prod(i, i);
        }
        EXPECT_NEAR(tr.real(), p, 1e-12);
        EXPECT_NEAR(tr.imag(), 0.0, 1e-12);
    }
}

TEST(IsSuperposable, Examples) {
    const CPMap map(ring_op());
    const SuperpositionSpec ring_spec(std::sqrt(0.8), std::sqrt(0.2));
    const SuperposableResult on = is_superposable(map, ring_spec, ring_state(2.0), ket0());
    EXPECT_TRUE(on.superposable);
    EXPECT_NEAR(on.report.success_prob, 0.75, 1e-15);
    EXPECT_NEAR(*on.report.theta, kPi, 1e-12);

    const SuperposableResult pole = is_superposable(map, ring_spec, ket0(), ket0());
    EXPECT_FALSE(pole.superposable);
    EXPECT_EQ(pole.report.success_prob, 0.0);

    const PureQubit upper = bloch_to_state({kR3h, 0.0, 0.5});
    const SuperposableResult off = is_superposable(map, ring_spec, upper, ket0());
    EXPECT_FALSE(off.superposable);
    EXPECT_FALSE(off.report.theta.has_value());
    // The grid oracle confirms no phase comes close.
    const oracle::GridMin g = oracle::brute_force_fit(apply_kraus(ring_op(), upper, ket0()), ring_spec, upper, ket0());
    EXPECT_GT(g.value, 1e-2);
}

TEST(IsSuperposable, EachOperatorFitsSeparately) {
    // Two operators, each the ring channel scaled by 1/sqrt2, one with an extra
    // global phase; each is fitted on its own.
    CMatrix a(2, 4);
    a(1, 2) = -kS2;
    CMatrix b(2, 4);
    b(1, 2) = Complex(0.0, kS2);
    const CPMap map(std::vector<KrausOperator>{KrausOperator(a), KrausOperator(b)});
    const SuperpositionSpec ring_spec(std::sqrt(0.8), std::sqrt(0.2));
    const SuperposableResult r = is_superposable(map, ring_spec, ring_state(0.4), ket0());
    EXPECT_TRUE(r.superposable);
    ASSERT_EQ(r.per_operator.size(), 2u);
    EXPECT_NEAR(r.report.success_prob, 0.75, 1e-14);
    EXPECT_NEAR(*r.per_operator[0].lambda, 0.625, 1e-12);

    // Adding an operator that fails anywhere on the ring breaks it.
    CMatrix c(2, 4);
    c(0, 0) = 0.5;
    CMatrix a2(2, 4);
    a2(1, 2) = -0.5;
    const CPMap bad(std::vector<KrausOperator>{KrausOperator(a2), KrausOperator(c)});
    const SuperposableResult rb = is_superposable(bad, ring_spec, ring_state(0.4), ket0());
    EXPECT_FALSE(rb.superposable);
    EXPECT_FALSE(rb.report.theta.has_value());
}

TEST(IsSuperposable, ZeroMapNeverPasses) {
    const CPMap zero(KrausOperator(CMatrix(2, 4)));
    std::mt19937_64 rng(37);
    for (int t = 0; t < 100; ++t) {
        EXPECT_FALSE(is_superposable(zero, SuperpositionSpec(kS2, kS2), oracle::random_qubit(rng), ket0()).superposable);
    }
}
