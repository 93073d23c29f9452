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

#ifndef QPATTERNS_CIRCUITS_H
#define QPATTERNS_CIRCUITS_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpatterns/state.h"

namespace qpatterns {

enum class GateKind { X, Y, Z, H, RX, RY, RZ, Phase, Swap };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);
bool gate_has_angle(GateKind kind);

/// Coefficient table of a single-qubit gate. `angle` is ignored for the
/// fixed gates. Swap has no pair transform and throws.
PairTransform gate_transform(GateKind kind, double angle = 0.0);

struct GateApplication {
    GateKind kind = GateKind::X;
    double angle = 0.0;
    int target = 0;
    /// Second qubit of a Swap; unused otherwise.
    int target2 = -1;
    std::vector<int> controls;

    bool operator==(const GateApplication&) const = default;
};

/// Ordered gate list over a fixed number of qubits. Gates run left to right
/// in append order.
class Circuit {
   public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateApplication>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }

    /// Validates indices against the width and against target/control overlap.
    Circuit& append(GateApplication op);
    Circuit& append(const Circuit& other);

    Circuit& x(int q, std::vector<int> controls = {});
    Circuit& y(int q, std::vector<int> controls = {});
    Circuit& z(int q, std::vector<int> controls = {});
    Circuit& h(int q, std::vector<int> controls = {});
    Circuit& rx(double angle, int q, std::vector<int> controls = {});
    Circuit& ry(double angle, int q, std::vector<int> controls = {});
    Circuit& rz(double angle, int q, std::vector<int> controls = {});
    Circuit& phase(double angle, int q, std::vector<int> controls = {});
    Circuit& swap(int a, int b, std::vector<int> controls = {});

    bool operator==(const Circuit&) const = default;

   private:
    int num_qubits_;
    std::vector<GateApplication> ops_;
};

/// Applies one gate in place.
void apply(const GateApplication& op, QuantumState& state);

/// Applies every gate in order, in place. Throws if widths differ.
void run(const Circuit& circuit, QuantumState& state);

/// Functional form: returns the evolved copy of `initial`.
QuantumState run(const Circuit& circuit, const QuantumState& initial);

/// Reversed gate order with every gate inverted, so that
/// run(inverse(c), run(c, s)) == s.
Circuit inverse(const Circuit& circuit);

/// Adds `extra_controls` to every gate. The extra qubits must not be
/// touched by the circuit.
Circuit controlled(const Circuit& circuit, std::span<const int> extra_controls);

/// The circuit concatenated `times` times.
Circuit repeated(const Circuit& circuit, int times);

/// Relabels qubit q of `circuit` as qubit_map[q] inside a circuit of
/// `num_qubits` qubits.
Circuit embed(const Circuit& circuit, int num_qubits, std::span<const int> qubit_map);

/// Quantum Fourier transform on a `width`-qubit register using H,
/// controlled-phase and Swap gates. Without the inverse flag it matches
/// dft(., +1) on the register's amplitudes; with it, dft(., -1).
Circuit qft_circuit(int width, bool inverse);

/// Same transform acting on the listed qubits of a larger system.
Circuit qft_circuit(std::span<const int> qubits, int num_qubits, bool inverse);

/// Circuit JSON: {"num_qubits": n, "ops": [{"kind", "angle"?, "target" |
/// "targets", "controls"?}]}. Throws std::invalid_argument naming the bad
/// field.
Circuit circuit_from_json(std::string_view text);
std::string circuit_to_json(const Circuit& circuit);

}  // namespace qpatterns

#endif  // QPATTERNS_CIRCUITS_H
