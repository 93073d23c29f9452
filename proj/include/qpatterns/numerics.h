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

#ifndef QPATTERNS_NUMERICS_H
#define QPATTERNS_NUMERICS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

/// Classical reference layer: roots of unity, inner products, the plain
/// O(N^2) discrete Fourier transform and the normalized Fejer kernel. The
/// simulator and the algorithm stack are tested against these.
namespace qpatterns {

using Complex = std::complex<double>;
using ComplexSequence = std::vector<Complex>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// The N-th roots of unity, element k = cos(2*pi*k/N) + i*sin(2*pi*k/N).
ComplexSequence roots_of_unity(std::size_t n);

/// sum_k x_k * conj(y_k). Throws std::invalid_argument on length mismatch.
Complex inner_product(std::span<const Complex> x, std::span<const Complex> y);

/// [1, L, L^2, ..., L^(N-1)] for the unit number L with phase p * 2*pi / N.
/// p need not be an integer.
ComplexSequence geometric_sequence(double p, std::size_t n);

/// Unitary DFT: out_k = 1/sqrt(N) * sum_r seq_r * exp(sign * i * 2*pi*k*r / N).
/// sign must be +1 or -1. sign = -1 maps geometric_sequence(v, N) for an
/// integer v onto the indicator at v.
ComplexSequence dft(std::span<const Complex> seq, int sign);

/// Entry k is cos(p*2*pi/N - k*2*pi/N): the angle-only similarity between
/// the parameter's unit vector and the k-th root of unity.
std::vector<double> angle_similarity(double p, std::size_t n);

/// Normalized Fejer kernel (1/N^2) (1 - cos(N d)) / (1 - cos(d)) with
/// d = 2*pi*(p - k)/N. This is the probability that phase estimation over N
/// outcomes reports k when the hidden factor is p. Returns 1 at d = 0.
double fejer_probability(double p, std::int64_t k, std::size_t n);

}  // namespace qpatterns

#endif  // QPATTERNS_NUMERICS_H
