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

#include "qpatterns/circuits.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qpatterns {

namespace {

constexpr Complex kI{0.0, 1.0};

struct GateInfo {
    GateKind kind;
    std::string_view name;
    bool has_angle;
};

constexpr GateInfo kGates[] = {
    {GateKind::X, "X", false},      {GateKind::Y, "Y", false},   {GateKind::Z, "Z", false},
    {GateKind::H, "H", false},      {GateKind::RX, "RX", true},  {GateKind::RY, "RY", true},
    {GateKind::RZ, "RZ", true},     {GateKind::Phase, "PHASE", true},
    {GateKind::Swap, "SWAP", false},
};

const GateInfo& info(GateKind kind) {
    for (const auto& g : kGates) {
        if (g.kind == kind) {
            return g;
        }
    }
    throw std::logic_error("unknown gate kind");
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

bool gate_has_angle(GateKind kind) { return info(kind).has_angle; }

std::optional<GateKind> gate_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& g : kGates) {
        if (g.name == upper) {
            return g.kind;
        }
    }
    return std::nullopt;
}

PairTransform gate_transform(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -kI, kI, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::RX:
            return {c, -kI * s, -kI * s, c};
        case GateKind::RY:
            return {c, -s, s, c};
        case GateKind::RZ:
            return {Complex{c, -s}, 0.0, 0.0, Complex{c, s}};
        case GateKind::Phase:
            return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
        case GateKind::Swap:
            break;
    }
    throw std::invalid_argument("SWAP is a two-qubit gate and has no pair transform");
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("Circuit: num_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

Circuit& Circuit::append(GateApplication op) {
    auto in_range = [&](int q) { return q >= 0 && q < num_qubits_; };
    if (!in_range(op.target)) {
        throw std::invalid_argument("target " + std::to_string(op.target) + " out of range");
    }
    if (op.kind == GateKind::Swap) {
        if (!in_range(op.target2) || op.target2 == op.target) {
            throw std::invalid_argument("SWAP needs two distinct in-range targets");
        }
    } else {
        op.target2 = -1;
    }
    if (!gate_has_angle(op.kind)) {
        op.angle = 0.0;
    }
    std::sort(op.controls.begin(), op.controls.end());
    for (std::size_t i = 0; i < op.controls.size(); ++i) {
        const int c = op.controls[i];
        if (!in_range(c)) {
            throw std::invalid_argument("control " + std::to_string(c) + " out of range");
        }
        if (c == op.target || c == op.target2) {
            throw std::invalid_argument("control " + std::to_string(c) + " is also a target");
        }
        if (i > 0 && op.controls[i - 1] == c) {
            throw std::invalid_argument("control " + std::to_string(c) + " listed twice");
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("cannot append a circuit of a different width");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

Circuit& Circuit::x(int q, std::vector<int> controls) {
    return append({GateKind::X, 0.0, q, -1, std::move(controls)});
}
Circuit& Circuit::y(int q, std::vector<int> controls) {
    return append({GateKind::Y, 0.0, q, -1, std::move(controls)});
}
Circuit& Circuit::z(int q, std::vector<int> controls) {
    return append({GateKind::Z, 0.0, q, -1, std::move(controls)});
}
Circuit& Circuit::h(int q, std::vector<int> controls) {
    return append({GateKind::H, 0.0, q, -1, std::move(controls)});
}
Circuit& Circuit::rx(double angle, int q, std::vector<int> controls) {
    return append({GateKind::RX, angle, q, -1, std::move(controls)});
}
Circuit& Circuit::ry(double angle, int q, std::vector<int> controls) {
    return append({GateKind::RY, angle, q, -1, std::move(controls)});
}
Circuit& Circuit::rz(double angle, int q, std::vector<int> controls) {
    return append({GateKind::RZ, angle, q, -1, std::move(controls)});
}
Circuit& Circuit::phase(double angle, int q, std::vector<int> controls) {
    return append({GateKind::Phase, angle, q, -1, std::move(controls)});
}
Circuit& Circuit::swap(int a, int b, std::vector<int> controls) {
    return append({GateKind::Swap, 0.0, a, b, std::move(controls)});
}

void apply(const GateApplication& op, QuantumState& state) {
    if (op.kind == GateKind::Swap) {
        state.apply_swap(op.target, op.target2, op.controls);
    } else {
        state.apply_pair_transform(gate_transform(op.kind, op.angle), op.target, op.controls);
    }
}

void run(const Circuit& circuit, QuantumState& state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("run: circuit has " + std::to_string(circuit.num_qubits()) +
                                    " qubits but the state has " +
                                    std::to_string(state.num_qubits()));
    }
    for (const auto& op : circuit.ops()) {
        apply(op, state);
    }
}

QuantumState run(const Circuit& circuit, const QuantumState& initial) {
    QuantumState s = initial;
    run(circuit, s);
    return s;
}

Circuit inverse(const Circuit& circuit) {
    Circuit out(circuit.num_qubits());
    const auto& ops = circuit.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        GateApplication op = *it;
        // X, Y, Z, H and SWAP are their own inverses.
        if (gate_has_angle(op.kind)) {
            op.angle = -op.angle;
        }
        out.append(std::move(op));
    }
    return out;
}

Circuit controlled(const Circuit& circuit, std::span<const int> extra_controls) {
    for (int c : extra_controls) {
        for (const auto& op : circuit.ops()) {
            const bool touched = op.target == c || op.target2 == c ||
                                 std::find(op.controls.begin(), op.controls.end(), c) !=
                                     op.controls.end();
            if (touched) {
                throw std::invalid_argument("controlled: qubit " + std::to_string(c) +
                                            " is already used by the circuit");
            }
        }
    }
    Circuit out(circuit.num_qubits());
    for (GateApplication op : circuit.ops()) {
        op.controls.insert(op.controls.end(), extra_controls.begin(), extra_controls.end());
        out.append(std::move(op));
    }
    return out;
}

Circuit repeated(const Circuit& circuit, int times) {
    if (times < 0) {
        throw std::invalid_argument("repeated: times must be non-negative");
    }
    Circuit out(circuit.num_qubits());
    for (int i = 0; i < times; ++i) {
        out.append(circuit);
    }
    return out;
}

Circuit embed(const Circuit& circuit, int num_qubits, std::span<const int> qubit_map) {
    if (static_cast<int>(qubit_map.size()) != circuit.num_qubits()) {
        throw std::invalid_argument("embed: qubit map must list one qubit per circuit qubit");
    }
    Circuit out(num_qubits);
    for (GateApplication op : circuit.ops()) {
        op.target = qubit_map[op.target];
        if (op.target2 >= 0) {
            op.target2 = qubit_map[op.target2];
        }
        for (int& c : op.controls) {
            c = qubit_map[c];
        }
        out.append(std::move(op));
    }
    return out;
}

Circuit qft_circuit(std::span<const int> qubits, int num_qubits, bool inverse_flag) {
    const int width = static_cast<int>(qubits.size());
    if (width < 1) {
        throw std::invalid_argument("qft_circuit: width must be at least 1");
    }
    Circuit forward(num_qubits);
    // Most significant qubit first; the phases that qubit a picks up from the
    // lower qubits b are 2*pi / 2^(a-b+1).
    for (int a = width - 1; a >= 0; --a) {
        forward.h(qubits[a]);
        for (int b = a - 1; b >= 0; --b) {
            forward.phase(kTwoPi / static_cast<double>(std::uint64_t{1} << (a - b + 1)),
                          qubits[a], {qubits[b]});
        }
    }
    for (int i = 0; i < width / 2; ++i) {
        forward.swap(qubits[i], qubits[width - 1 - i]);
    }
    return inverse_flag ? inverse(forward) : forward;
}

Circuit qft_circuit(int width, bool inverse_flag) {
    if (width < 1) {
        throw std::invalid_argument("qft_circuit: width must be at least 1");
    }
    std::vector<int> qubits(width);
    for (int i = 0; i < width; ++i) {
        qubits[i] = i;
    }
    return qft_circuit(qubits, width, inverse_flag);
}

}  // namespace qpatterns
