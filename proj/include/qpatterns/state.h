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

#ifndef QPATTERNS_STATE_H
#define QPATTERNS_STATE_H

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpatterns/numerics.h"

namespace qpatterns {

/// Largest register the dense simulator accepts (2^26 amplitudes, 1 GiB).
inline constexpr int kMaxQubits = 26;

/// The 2x2 coefficient table applied to every amplitude pair that differs
/// only in the target bit:
///   b0 = c00*a0 + c01*a1
///   b1 = c10*a0 + c11*a1
struct PairTransform {
    Complex c00{1.0, 0.0};
    Complex c01{0.0, 0.0};
    Complex c10{0.0, 0.0};
    Complex c11{1.0, 0.0};

    /// Columns orthonormal within tol.
    bool is_unitary(double tol = 1e-9) const;
};

/// Dense statevector over n qubits. Basis index i gives qubit j the bit
/// (i >> j) & 1. Starts in the all-zero basis state.
class QuantumState {
   public:
    explicit QuantumState(int num_qubits);

    /// Takes ownership of explicit amplitudes; length must be a power of two.
    static QuantumState from_amplitudes(ComplexSequence amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }
    const Complex& operator[](std::uint64_t index) const { return amplitudes_[index]; }

    /// Sum of |a_i|^2.
    double norm_squared() const;

    /// Applies t to every pair (i0, i0 + 2^target) where bit `target` of i0 is
    /// 0 and every control bit of i0 is 1. Other amplitudes are untouched.
    void apply_pair_transform(const PairTransform& t, int target, std::span<const int> controls = {});

    /// Exchanges qubits a and b on the control-satisfying subspace.
    void apply_swap(int a, int b, std::span<const int> controls = {});

   private:
    QuantumState() = default;
    std::uint64_t control_mask(std::span<const int> controls, std::uint64_t exclude) const;

    int num_qubits_ = 0;
    ComplexSequence amplitudes_;
};

/// A named run of qubits inside the whole system.
struct Register {
    std::string name;
    int offset = 0;
    int width = 0;

    std::uint64_t value_of(std::uint64_t basis_index) const {
        return (basis_index >> offset) & ((std::uint64_t{1} << width) - 1);
    }
    int qubit(int bit) const { return offset + bit; }
    std::vector<int> qubits() const;
};

/// Disjoint registers packed from qubit 0 upward in the order they are added.
class RegisterLayout {
   public:
    RegisterLayout() = default;

    /// Appends a register at the next free qubit. Names must be unique.
    RegisterLayout& add(std::string name, int width);

    const Register& get(std::string_view name) const;
    bool contains(std::string_view name) const;
    int num_qubits() const { return num_qubits_; }
    const std::vector<Register>& registers() const { return registers_; }

   private:
    std::vector<Register> registers_;
    int num_qubits_ = 0;
};

/// One display field of a histogram label. Fields are packed low bits first
/// and printed in listed order, separated by '|'.
struct LabelField {
    std::string name;
    int width = 0;
};

/// Outcome distribution keyed by basis index. Exact histograms hold every
/// outcome's probability; sampled histograms additionally hold counts and
/// the generator metadata needed to reproduce them.
struct OutcomeHistogram {
    std::vector<LabelField> fields;
    std::map<std::uint64_t, double> probabilities;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;

    int width() const;
    bool sampled() const { return shots.has_value(); }
    double probability(std::uint64_t index) const;
    std::uint64_t count(std::uint64_t index) const;

    /// MSB-left fixed-width binary, one group per field joined by '|'.
    std::string label(std::uint64_t index) const;
};

/// Name of the sampling generator written into serialized histograms.
inline constexpr std::string_view kSamplerName = "mt19937_64/inverse-cdf/v1";

/// Exact Born-rule probabilities |a_i|^2 for every basis state.
OutcomeHistogram probabilities(const QuantumState& state);

/// Exact probabilities, labelled with a single field of the state's width.
OutcomeHistogram probabilities(std::span<const double> masses, int width);

/// Seeded inverse-CDF draws from a discrete distribution. The uniform
/// variate is built from the top 53 bits of each engine word, so the stream
/// is identical on every platform.
class OutcomeSampler {
   public:
    explicit OutcomeSampler(std::uint64_t seed);

    /// Index of the outcome selected by one draw. Zero-mass outcomes are
    /// never returned.
    std::uint64_t draw(std::span<const double> masses);
    std::uint64_t draw(const OutcomeHistogram& exact);

   private:
    double next_uniform();

    std::mt19937_64 engine_;
};

/// Draws `shots` independent outcomes by inverse CDF over the exact
/// probabilities. Identical (state, shots, seed) give identical counts.
OutcomeHistogram sample(const QuantumState& state, std::uint64_t shots, std::uint64_t seed);
OutcomeHistogram sample(const OutcomeHistogram& exact, std::uint64_t shots, std::uint64_t seed);

/// Sums probabilities (and counts) over every bit outside the named
/// registers. The result packs the listed registers low bits first.
OutcomeHistogram marginal(const OutcomeHistogram& hist, const RegisterLayout& layout,
                          std::span<const std::string> register_names);
OutcomeHistogram marginal(const OutcomeHistogram& hist, const RegisterLayout& layout,
                          const std::string& register_name);

}  // namespace qpatterns

#endif  // QPATTERNS_STATE_H
