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
#include "superpose/measure.hpp"
#include "superpose/synthesize.hpp"

using namespace superpose;
using oracle::kPi;

TEST(WilsonEstimate, Basics) {
    const FractionEstimate f = wilson_estimate(50, 100);
    EXPECT_EQ(f.fraction, 0.5);
    EXPECT_NEAR(f.ci95_lo, 0.4038, 1e-4);
    EXPECT_NEAR(f.ci95_hi, 0.5962, 1e-4);
    const FractionEstimate z = wilson_estimate(0, 1000);
    EXPECT_EQ(z.ci95_lo, 0.0);
    EXPECT_GT(z.ci95_hi, 0.0);
    const FractionEstimate one = wilson_estimate(10, 10);
    EXPECT_NEAR(one.ci95_hi, 1.0, 1e-15);
    EXPECT_LT(one.ci95_lo, 1.0);
}

TEST(BandFraction, HatBoxExample) {
    const FractionEstimate f = band_fraction({0.0, 0.0, 0.0, true}, 0.02, 1000000, 7);
    EXPECT_NEAR(f.fraction, 0.02, 0.0005);
    EXPECT_EQ(f.samples, 1000000u);
    EXPECT_EQ(band_expectation({0.0, 0.0, 0.0, true}, 0.02), 0.02);
}

TEST(BandFraction, TruncatedBand) {
    const SphereCircle c{0.0, 0.0, 0.99, true};
    const double eps = 0.05;
    EXPECT_FALSE(band_expectation(c, eps).has_value());
    const double expect = oracle::band_fraction_quadrature(c.c, eps);
    EXPECT_LT(expect, eps);
    const FractionEstimate f = band_fraction(c, eps, 1000000, 11);
    const double sigma = std::sqrt(expect * (1.0 - expect) / 1e6);
    EXPECT_LT(std::abs(f.fraction - expect), 4.0 * sigma);
    EXPECT_LT(f.fraction, eps);
}

TEST(BandFraction, TrivialAndErrors) {
    EXPECT_EQ(band_fraction({0.3, 1.0, 0.5, true}, 2.1, 1, 5).fraction, 1.0);
    EXPECT_THROW(band_fraction({0.0, 0.0, 0.0, true}, 0.1, 0, 1), DomainError);
    EXPECT_THROW(band_fraction({0.0, 0.0, 0.0, true}, 0.0, 10, 1), DomainError);
    EXPECT_THROW(band_fraction({0.0, 0.0, 1.5, true}, 0.1, 10, 1), DomainError);
}

TEST(BandFraction, HatBoxLawAcrossSeeds) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 5; ++t) {
        const SphereCircle c = oracle::random_canonical_circle(rng, 0.8);
        const double eps = oracle::uniform(rng, 0.005, 0.15);
        const double sigma = std::sqrt(eps * (1.0 - eps) / 2e5);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const FractionEstimate f = band_fraction(c, eps, 200000, seed);
            EXPECT_LT(std::abs(f.fraction - eps), 4.0 * sigma) << "circle " << t << " seed " << seed;
        }
    }
}

TEST(BandFraction, QuadratureOracleMatchesZoneLaw) {
    for (double c : {-0.7, 0.0, 0.3, 0.9}) {
        for (double eps : {0.001, 0.05, 0.1}) {
            EXPECT_NEAR(oracle::band_fraction_quadrature(c, eps), eps, 1e-10);
        }
    }
}

TEST(BandFraction, DeterministicAndMonotone) {
    const SphereCircle c{0.4, 2.0, -0.3, true};
    const FractionEstimate a = band_fraction(c, 0.01, 300000, 5);
    const FractionEstimate b = band_fraction(c, 0.01, 300000, 5);
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_EQ(a.fraction, b.fraction);
    std::uint64_t prev = 300001;
    for (double eps : {0.2, 0.05, 0.01, 0.001}) {
        const FractionEstimate f = band_fraction(c, eps, 300000, 5);
        EXPECT_LE(f.hits, prev);
        prev = f.hits;
    }
}

TEST(SuperposableFraction, Examples) {
    const SuperpositionChannel ch = synthesize_channel({0.0, 0.0, 0.5, false});
    const CPMap map(ch.kraus);
    EXPECT_LT(superposable_fraction(map, ch.spec, 1e-6, 100000, 3).fraction, 1e-3);

    // Columns a12, a14 only: the |1> slot of the known register, which |0> never fills.
    CMatrix m(2, 4);
    m(0, 1) = 0.5;
    m(1, 3) = 0.5;
    EXPECT_EQ(superposable_fraction(CPMap(KrausOperator(m)), ch.spec, 1e-2, 100000, 3).hits, 0u);
}

TEST(SuperposableFraction, MonotoneInTolerance) {
    const SuperpositionChannel ch = synthesize_channel({0.0, 0.0, 0.5, false});
    const CPMap map(ch.kraus);
    std::uint64_t prev = 0;
    for (double tol : {1e-4, 1e-3, 1e-2, 1e-1}) {
        const FractionEstimate f = superposable_fraction(map, ch.spec, tol, 200000, 4);
        EXPECT_GE(f.hits, prev);
        prev = f.hits;
    }
    const double lo = superposable_fraction(map, ch.spec, 1e-4, 1000000, 5).fraction;
    const double hi = superposable_fraction(map, ch.spec, 1e-2, 1000000, 5).fraction;
    ASSERT_GT(lo, 0.0);
    const double ratio = hi / lo;
    EXPECT_GT(ratio, 100.0 / 3.0);
    EXPECT_LT(ratio, 300.0);
}
