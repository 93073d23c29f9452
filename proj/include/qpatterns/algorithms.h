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

#ifndef QPATTERNS_ALGORITHMS_H
#define QPATTERNS_ALGORITHMS_H

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qpatterns/circuits.h"
#include "qpatterns/state.h"

namespace qpatterns {

/// How an oracle multiplies the good amplitudes by -1.
///   AncillaTrick: flip an ancilla prepared in (|0> - |1>)/sqrt(2).
///   ZXZX: controlled Z,X,Z,X on the ancilla, which is -I on any state.
/// Both leave the ancilla exactly where they found it.
enum class OracleConstruction { AncillaTrick, ZXZX };

/// Register value has bit 0 clear (even) or set (odd).
struct ParityPredicate {
    bool even = true;
};
/// Register value is one of the listed labels.
struct ExplicitSetPredicate {
    std::vector<std::uint64_t> labels;
};
/// Most significant register bit is set (negative in two's complement).
struct SignBitPredicate {};
/// Register value equals the pattern exactly.
struct KeyMatchPredicate {
    std::uint64_t pattern = 0;
};

using OraclePredicate =
    std::variant<ParityPredicate, ExplicitSetPredicate, SignBitPredicate, KeyMatchPredicate>;

struct OracleSpec {
    OraclePredicate predicate;
    /// Register the predicate reads.
    std::string register_name;
    OracleConstruction construction = OracleConstruction::ZXZX;
    /// One-qubit register the construction acts on; it must be |0> on entry.
    std::string ancilla = "oracle";
};

/// Circuit over layout.num_qubits() that negates exactly the good basis
/// states. Zeros in a pattern are matched by X-conjugating those qubits.
Circuit build_oracle(const OracleSpec& spec, const RegisterLayout& layout);

/// I - 2|0..0><0..0| on the listed qubits: negates the all-zero state.
Circuit zero_phase_flip(std::span<const int> qubits, int num_qubits);

/// 2|0..0><0..0| - I on the listed qubits: reflection about the all-zero
/// state.
Circuit reflect_about_zero(std::span<const int> qubits, int num_qubits);

/// Inversion about the mean, a -> 2*mean - a, on the register's amplitude
/// blocks. Built as H^w . reflect_about_zero . H^w.
Circuit diffusion(const std::string& register_name, const RegisterLayout& layout);

struct PhaseEstimationConfig {
    int control_width = 3;
    /// Operator U on the target qubits.
    Circuit unitary{1};
    /// Prepares an eigenvector of U from |0..0>.
    Circuit eigenprep{1};
};

struct PhaseEstimationResult {
    /// Distribution of the control register.
    OutcomeHistogram histogram;
    /// || U psi - <psi|U psi> psi || for the prepared psi.
    double eigen_residual = 0.0;
    bool eigenstate = true;
};

/// Uniformizes the control register, applies U^(2^k) controlled by control
/// qubit k (as 2^k concatenated controlled copies), then the inverse QFT on
/// the control register. Control qubits are 0..t-1; the target follows.
PhaseEstimationResult phase_estimation(const PhaseEstimationConfig& config);

/// The RY(2*theta) coin with theta = p * 2*pi / 2^t and its eigenvector
/// (i, 1)/sqrt(2), prepared by H then PHASE(-pi/2) up to global phase.
PhaseEstimationConfig coin_phase_config(double p, int control_width);

/// Starts from the uniform superposition over `width` qubits and applies
/// (diffusion . oracle) `iterations` times. The oracle's register must be
/// named by spec.register_name; an ancilla register is added for it.
OutcomeHistogram grover_search(const OracleSpec& oracle, int width, int iterations);

/// (A . D0 . A^-1 . O)^k A|0..0>, with D0 the reflection about the all-zero
/// state of every qubit in the layout.
QuantumState amplitude_amplify(const Circuit& prep, const RegisterLayout& layout,
                               const OracleSpec& oracle, int iterations);

/// Number of Grover iterations that maximizes the good probability when the
/// prepared state has good-state probability `fraction`:
/// floor(pi / (4 asin(sqrt(fraction)))).
int optimal_iterations(double fraction);

struct CountingResult {
    OutcomeHistogram histogram;
    /// Most probable control outcome p and its mirror 2^t - p (mod 2^t).
    std::uint64_t top_outcome = 0;
    std::uint64_t mirror_outcome = 0;
    int control_width = 0;
    /// cos^2(p pi / 2^t).
    double estimated_fraction = 0.0;
    /// round(2^count_width * estimated_fraction).
    std::uint64_t estimated_count = 0;
    int count_width = 0;
    /// Set when the estimate lands on 0 or on every state without the
    /// control register resolving an exact phase, i.e. t is too small to
    /// tell a few good states from none.
    bool resolution_flag = false;
};

/// Counting of the good states of A|0..0>: phase estimation of the iterate
/// G = A . Z0 . A^-1 . O, where Z0 negates the all-zero state. With that
/// sign the eigenphases sit at pi +- 2*theta0 and the good fraction is
/// cos^2(p pi / 2^t).
CountingResult quantum_count(const Circuit& prep, const RegisterLayout& layout,
                             const OracleSpec& oracle, int control_width, int count_width);

/// Basic counting over a uniform `width`-qubit register.
CountingResult quantum_count_uniform(const OracleSpec& oracle, int width, int control_width);

/// Good-state probability of A|0..0> estimated by the same machinery.
double estimate_amplitude(const Circuit& prep, const RegisterLayout& layout,
                          const OracleSpec& oracle, int control_width);

/// Picks the most probable outcome (ties within 1e-9 go to the smaller
/// index) and fills the conversion fields of a CountingResult.
CountingResult interpret_counting(OutcomeHistogram histogram, int control_width, int count_width);

}  // namespace qpatterns

#endif  // QPATTERNS_ALGORITHMS_H
