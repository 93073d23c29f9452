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

#include <cmath>
#include <stdexcept>

namespace qpatterns {

namespace {

void require_positive(std::size_t n, const char* what) {
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + ": length must be at least 1");
    }
}

}  // namespace

ComplexSequence roots_of_unity(std::size_t n) {
    require_positive(n, "roots_of_unity");
    ComplexSequence out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    }
    return out;
}

Complex inner_product(std::span<const Complex> x, std::span<const Complex> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("inner_product: sequences have different lengths");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < x.size(); ++k) {
        acc += x[k] * std::conj(y[k]);
    }
    return acc;
}

ComplexSequence geometric_sequence(double p, std::size_t n) {
    require_positive(n, "geometric_sequence");
    ComplexSequence out(n);
    const double step = p * kTwoPi / static_cast<double>(n);
    // Evaluate each power directly; repeated multiplication drifts off the unit circle.
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = std::polar(1.0, step * static_cast<double>(k));
    }
    return out;
}

ComplexSequence dft(std::span<const Complex> seq, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("dft: sign must be +1 or -1");
    }
    const std::size_t n = seq.size();
    require_positive(n, "dft");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexSequence out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t r = 0; r < n; ++r) {
            // Reduce k*r mod N first so the angle stays small and exact.
            const std::size_t kr = (k * r) % n;
            const double angle = sign * kTwoPi * static_cast<double>(kr) / static_cast<double>(n);
            acc += seq[r] * std::polar(1.0, angle);
        }
        out[k] = acc * scale;
    }
    return out;
}

std::vector<double> angle_similarity(double p, std::size_t n) {
    require_positive(n, "angle_similarity");
    std::vector<double> out(n);
    const double base = kTwoPi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = std::cos(p * base - static_cast<double>(k) * base);
    }
    return out;
}

double fejer_probability(double p, std::int64_t k, std::size_t n) {
    require_positive(n, "fejer_probability");
    const double nn = static_cast<double>(n);
    const double delta = kTwoPi * (p - static_cast<double>(k)) / nn;
    // (1 - cos(N d)) / (1 - cos d) == sin^2(N d / 2) / sin^2(d / 2); the sine
    // form keeps full precision as d approaches a singular point.
    const double denom = std::sin(delta / 2.0);
    if (std::abs(denom) < 1e-12) {
        return 1.0;
    }
    const double ratio = std::sin(nn * delta / 2.0) / (nn * denom);
    return ratio * ratio;
}

}  // namespace qpatterns
