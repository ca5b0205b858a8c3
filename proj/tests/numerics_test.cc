// Copyright 2026 The loopmesh Authors
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

#include "loopmesh/numerics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "loopmesh/errors.h"
#include "test_util.h"

using namespace loopmesh;
using loopmesh::testing::naive_product;
using loopmesh::testing::test_rng;

TEST(numerics, frobenius_distance_examples) {
    auto i2 = ComplexMatrix::identity(2);
    ASSERT_EQ(frobenius_distance(i2, i2), 0);
    ASSERT_NEAR(frobenius_distance(i2, ComplexMatrix::zeros(2)), std::sqrt(2.0), 1e-15);
    ComplexMatrix flip{{1, 0}, {0, -1}};
    ASSERT_NEAR(frobenius_distance(i2, flip), 2.0, 1e-15);
    ASSERT_EQ(frobenius_distance(flip, i2), frobenius_distance(i2, flip));
    ASSERT_THROW(frobenius_distance(i2, ComplexMatrix::identity(3)), Error);
}

TEST(numerics, matrix_shape_errors) {
    ASSERT_THROW(ComplexMatrix(0, 3), Error);
    ASSERT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
    ASSERT_THROW((ComplexMatrix{{1, 2}, {3}}), Error);
}

TEST(numerics, product_matches_naive) {
    auto rng = test_rng(1);
    auto a = haar_unitary(5, rng);
    auto b = haar_unitary(5, rng);
    ASSERT_LT(frobenius_distance(a * b, naive_product(a, b)), 1e-14);
}

TEST(numerics, unit_phase_exact_on_quarter_turns) {
    ASSERT_EQ(unit_phase(0), Complex(1, 0));
    ASSERT_EQ(unit_phase(std::numbers::pi / 2), Complex(0, 1));
    ASSERT_EQ(unit_phase(std::numbers::pi), Complex(-1, 0));
    ASSERT_EQ(unit_phase(-std::numbers::pi), Complex(-1, 0));
    ASSERT_EQ(unit_phase(3 * std::numbers::pi / 2), Complex(0, -1));
    ASSERT_NEAR(std::abs(unit_phase(0.3) - std::polar(1.0, 0.3)), 0, 1e-15);
}

TEST(haar_unitary, one_by_one_has_unit_modulus) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        auto u = haar_unitary(1, RandomSource{seed, 0});
        ASSERT_NEAR(std::abs(u(0, 0)), 1.0, 1e-12);
    }
}

TEST(haar_unitary, is_unitary) {
    for (std::size_t n : {2, 5, 16, 64}) {
        auto u = haar_unitary(n, RandomSource{99, n});
        ASSERT_LT(unitarity_defect(u), 1e-12) << "n=" << n;
    }
}

TEST(haar_unitary, zero_dimension_rejected) {
    try {
        haar_unitary(0, RandomSource{});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::invalid_dimension);
    }
}

TEST(haar_unitary, deterministic_per_stream) {
    auto a = haar_unitary(6, RandomSource{7, 3});
    auto b = haar_unitary(6, RandomSource{7, 3});
    ASSERT_EQ(a, b);
    ASSERT_NE(a, haar_unitary(6, RandomSource{7, 4}));
    ASSERT_NE(a, haar_unitary(6, RandomSource{8, 3}));
}

// E|u_ij|^2 = 1/n under the Haar measure; compare the empirical mean against it
// at 3 standard errors of the estimator.
TEST(haar_unitary, second_moment_matches_haar) {
    constexpr std::size_t samples = 2000;
    for (std::size_t n : {2, 4, 8}) {
        for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 0}, {n - 1, 1}, {n / 2, n - 1}}) {
            double sum = 0;
            double sum_sq = 0;
            for (std::size_t t = 0; t < samples; t++) {
                auto u = haar_unitary(n, RandomSource{2024, t});
                double p = std::norm(u(i, j));
                sum += p;
                sum_sq += p * p;
            }
            double mean = sum / samples;
            double var = (sum_sq - samples * mean * mean) / (samples - 1);
            double se = std::sqrt(var / samples);
            ASSERT_LT(std::abs(mean - 1.0 / n), 3 * se) << "n=" << n << " (" << i << "," << j << ")";
        }
    }
}

// Haar-invariance check beyond the second moment: the phase-fixed QR makes arg(u_00)
// uniform, so E[u_00] = 0. A missing phase fix biases it towards the positive real axis.
TEST(haar_unitary, first_moment_vanishes) {
    constexpr std::size_t samples = 2000;
    const std::size_t n = 3;
    Complex sum = 0;
    for (std::size_t t = 0; t < samples; t++) {
        sum += haar_unitary(n, RandomSource{11, t})(0, 0);
    }
    Complex mean = sum / static_cast<double>(samples);
    // Var(Re u_00) = 1/(2n); 3 standard errors per component.
    double se = std::sqrt(1.0 / (2 * n) / samples);
    ASSERT_LT(std::abs(mean.real()), 3 * se);
    ASSERT_LT(std::abs(mean.imag()), 3 * se);
}

TEST(svd, identity_and_diagonal) {
    auto v = svd_values(ComplexMatrix::identity(3));
    ASSERT_EQ(v.size(), 3u);
    for (double s : v) {
        ASSERT_NEAR(s, 1, 1e-15);
    }
    v = svd_values(ComplexMatrix{{0.5, 0}, {0, 0.2}});
    ASSERT_NEAR(v[0], 0.5, 1e-15);
    ASSERT_NEAR(v[1], 0.2, 1e-15);
    v = svd_values(ComplexMatrix{{0.2, 0}, {0, Complex(0, -0.5)}});
    ASSERT_NEAR(v[0], 0.5, 1e-15);
    ASSERT_NEAR(v[1], 0.2, 1e-15);
}

TEST(svd, scaled_unitary) {
    auto u = haar_unitary(4, RandomSource{5, 0});
    u *= 0.7;
    for (double s : svd_values(u)) {
        ASSERT_NEAR(s, 0.7, 1e-12);
    }
}

TEST(svd, reconstruction_and_ordering) {
    auto rng = test_rng(2);
    for (std::size_t n : {1, 2, 3, 7, 16, 33, 64}) {
        ComplexMatrix m(n, n);
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                // Uniform in the unit disk.
                double rad = std::sqrt(loopmesh::testing::uniform(rng, 0, 1));
                m(r, c) = std::polar(rad, loopmesh::testing::uniform(rng, 0, 2 * std::numbers::pi));
            }
        }
        auto result = svd(m);
        ComplexMatrix sigma(n, n);
        for (std::size_t k = 0; k < n; k++) {
            sigma(k, k) = result.values[k];
        }
        ASSERT_LT(frobenius_distance(naive_product(naive_product(result.left, sigma), result.right), m), 1e-10)
            << "n=" << n;
        for (std::size_t k = 1; k < n; k++) {
            ASSERT_LE(result.values[k], result.values[k - 1]);
        }
        ASSERT_GE(result.values.back(), 0);
        ASSERT_LE(result.values.front(), frobenius_norm(m) + 1e-12);
    }
}

TEST(svd, rejects_bad_input) {
    ASSERT_THROW(svd_values(ComplexMatrix(2, 3)), Error);
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 1) = Complex(NAN, 0);
    try {
        svd_values(m);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::invalid_input);
    }
}
