// Copyright 2026 The qpatterns Authors
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

#include "qpatterns/numerics.h"

#include <gtest/gtest.h>

#include <random>

#include "reference.h"

using namespace qpatterns;

TEST(numerics, roots_of_unity) {
    for (std::size_t n : {1, 2, 3, 8, 13}) {
        const auto w = roots_of_unity(n);
        ASSERT_EQ(w.size(), n);
        Complex sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_NEAR(std::abs(w[k]), 1.0, 1e-12);
            EXPECT_NEAR(std::abs(std::pow(w[k], static_cast<double>(n)) - 1.0), 0.0, 1e-9);
            sum += w[k];
        }
        if (n > 1) {
            EXPECT_NEAR(std::abs(sum), 0.0, 1e-9);
        }
    }
    const auto w4 = roots_of_unity(4);
    EXPECT_NEAR(std::abs(w4[1] - Complex(0, 1)), 0.0, 1e-12);
    EXPECT_THROW(roots_of_unity(0), std::invalid_argument);
}

TEST(numerics, inner_product) {
    const ComplexSequence a = {{1, 2}, {0, -1}};
    const ComplexSequence b = {{0, 1}, {3, 0}};
    // (1+2i)(-i) + (-i)(3)
    EXPECT_NEAR(std::abs(inner_product(a, b) - Complex(2, -4)), 0.0, 1e-12);
    EXPECT_NEAR(inner_product(a, a).real(), 6.0, 1e-12);
    EXPECT_NEAR(inner_product(a, a).imag(), 0.0, 1e-12);
    const ComplexSequence c = {1};
    EXPECT_THROW(inner_product(a, c), std::invalid_argument);
}

TEST(numerics, geometric_sequence) {
    const auto g = geometric_sequence(3, 8);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(std::abs(g[k] - std::polar(1.0, 2 * M_PI * 3 * k / 8.0)), 0.0, 1e-12);
    }
    // Integer p wraps around the circle exactly p times.
    const auto h = geometric_sequence(1, 4);
    EXPECT_NEAR(std::abs(h[2] + 1.0), 0.0, 1e-12);
}

TEST(numerics, dft_matches_matrix) {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 3, 5}) {
        const auto v = reference::random_state(n, rng);
        for (int sign : {1, -1}) {
            const auto out = dft(reference::to_std(v), sign);
            const reference::Vec want = reference::dft_matrix(v.size(), sign) * v;
            EXPECT_LT((reference::to_vec(out) - want).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
    EXPECT_THROW(dft(ComplexSequence{1, 0}, 0), std::invalid_argument);
    EXPECT_THROW(dft(ComplexSequence{}, 1), std::invalid_argument);
}

TEST(numerics, dft_decodes_integer_geometric_sequence) {
    for (int v = 0; v < 16; ++v) {
        const auto out = dft(geometric_sequence(v, 16), -1);
        for (int k = 0; k < 16; ++k) {
            EXPECT_NEAR(std::abs(out[k]), k == v ? 4.0 : 0.0, 1e-9) << v << " " << k;
        }
    }
}

TEST(numerics, dft_round_trip_and_unitarity) {
    std::mt19937_64 rng(12);
    const auto v = reference::to_std(reference::random_state(4, rng));
    const auto back = dft(dft(v, 1), -1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_NEAR(std::abs(back[i] - v[i]), 0.0, 1e-12);
    }
    const auto f = dft(v, 1);
    EXPECT_NEAR(inner_product(f, f).real(), 1.0, 1e-12);
}

TEST(numerics, angle_similarity) {
    const auto s = angle_similarity(5.5, 8);
    EXPECT_NEAR(s[5], s[6], 1e-12);
    EXPECT_NEAR(s[5], std::cos(M_PI / 8), 1e-12);
    const auto t = angle_similarity(2, 8);
    EXPECT_NEAR(t[2], 1.0, 1e-12);
    EXPECT_NEAR(t[6], -1.0, 1e-12);
}

TEST(numerics, fejer_against_direct_sum) {
    // |(1/N) sum_r exp(2 pi i r (p - k) / N)|^2 summed term by term.
    for (double p : {5.7, 5.5, 0.25, 3.0}) {
        for (std::size_t n : {8, 16, 32}) {
            double total = 0;
            for (std::size_t k = 0; k < n; ++k) {
                Complex acc = 0;
                for (std::size_t r = 0; r < n; ++r) {
                    acc += std::polar(1.0, 2 * M_PI * r * (p - double(k)) / double(n));
                }
                const double want = std::norm(acc) / double(n * n);
                EXPECT_NEAR(fejer_probability(p, k, n), want, 1e-12) << p << " " << n << " " << k;
                total += fejer_probability(p, k, n);
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
        }
    }
    EXPECT_DOUBLE_EQ(fejer_probability(5, 5, 8), 1.0);
    EXPECT_NEAR(fejer_probability(5, 13, 8), 1.0, 1e-12);  // aliases onto k = 5
}

TEST(numerics, polar_round_trip) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        const Complex c(u(rng), u(rng));
        EXPECT_GE(std::abs(c), 0.0);
        EXPECT_NEAR(std::abs(c), std::sqrt(c.real() * c.real() + c.imag() * c.imag()), 1e-12);
        EXPECT_NEAR(std::abs(std::polar(std::abs(c), std::arg(c)) - c), 0.0, 1e-12);
    }
}
