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

#include "qpatterns/algorithms.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace qpatterns {

namespace {

/// Appends a -1 on every basis state whose `qubits` read `bits` (bit b of
/// `bits` for qubits[b]). For the ancilla trick the caller has already put
/// the ancilla in (|0> - |1>)/sqrt(2).
void flip_on_match(Circuit& c, const std::vector<int>& qubits, std::uint64_t bits, int ancilla,
                   OracleConstruction construction) {
    std::vector<int> zeros;
    for (std::size_t b = 0; b < qubits.size(); ++b) {
        if (((bits >> b) & 1) == 0) {
            zeros.push_back(qubits[b]);
        }
    }
    for (int q : zeros) {
        c.x(q);
    }
    if (construction == OracleConstruction::AncillaTrick) {
        c.x(ancilla, qubits);
    } else {
        c.z(ancilla, qubits);
        c.x(ancilla, qubits);
        c.z(ancilla, qubits);
        c.x(ancilla, qubits);
    }
    for (int q : zeros) {
        c.x(q);
    }
}

std::vector<int> iota_qubits(int offset, int count) {
    std::vector<int> q(count);
    std::iota(q.begin(), q.end(), offset);
    return q;
}

/// Phase estimation core: control qubits [0, t), target qubits [t, t + w).
OutcomeHistogram estimate_phases(const Circuit& target_prep, const Circuit& unitary,
                                 int control_width) {
    if (control_width < 1) {
        throw std::invalid_argument("control_width must be at least 1");
    }
    if (target_prep.num_qubits() != unitary.num_qubits()) {
        throw std::invalid_argument("eigenprep and unitary act on different widths");
    }
    const int t = control_width;
    const int w = unitary.num_qubits();
    const int total = t + w;
    const std::vector<int> target_map = iota_qubits(t, w);
    const std::vector<int> controls = iota_qubits(0, t);

    QuantumState state(total);
    Circuit setup(total);
    for (int q : controls) {
        setup.h(q);
    }
    setup.append(embed(target_prep, total, target_map));
    run(setup, state);

    const Circuit wide_unitary = embed(unitary, total, target_map);
    for (int k = 0; k < t; ++k) {
        const int control[] = {k};
        const Circuit cu = controlled(wide_unitary, control);
        const std::uint64_t reps = std::uint64_t{1} << k;
        for (std::uint64_t r = 0; r < reps; ++r) {
            run(cu, state);
        }
    }
    run(qft_circuit(controls, total, /*inverse=*/true), state);

    RegisterLayout layout;
    layout.add("control", t).add("target", w);
    return marginal(probabilities(state), layout, "control");
}

void check_width(const Circuit& prep, const RegisterLayout& layout) {
    if (prep.num_qubits() != layout.num_qubits()) {
        throw std::invalid_argument("prep circuit width " + std::to_string(prep.num_qubits()) +
                                    " does not match layout width " +
                                    std::to_string(layout.num_qubits()));
    }
}

}  // namespace

Circuit build_oracle(const OracleSpec& spec, const RegisterLayout& layout) {
    const Register& reg = layout.get(spec.register_name);
    const Register& anc = layout.get(spec.ancilla);
    if (anc.name == reg.name) {
        throw std::invalid_argument("oracle ancilla must differ from the register it reads");
    }
    const int ancilla = anc.qubit(0);
    const std::vector<int> all = reg.qubits();
    const std::uint64_t limit = std::uint64_t{1} << reg.width;

    // Each entry: the qubits to match and the bits they must read.
    std::vector<std::pair<std::vector<int>, std::uint64_t>> matches;
    std::visit(
        [&](const auto& pred) {
            using P = std::decay_t<decltype(pred)>;
            if constexpr (std::is_same_v<P, ParityPredicate>) {
                matches.push_back({{reg.qubit(0)}, pred.even ? 0u : 1u});
            } else if constexpr (std::is_same_v<P, ExplicitSetPredicate>) {
                if (pred.labels.empty()) {
                    throw std::invalid_argument("ExplicitSet oracle needs at least one label");
                }
                std::set<std::uint64_t> seen;
                for (std::uint64_t label : pred.labels) {
                    if (label >= limit) {
                        throw std::invalid_argument("label " + std::to_string(label) +
                                                    " does not fit register '" + reg.name + "'");
                    }
                    if (!seen.insert(label).second) {
                        throw std::invalid_argument("label " + std::to_string(label) +
                                                    " listed twice");
                    }
                    matches.push_back({all, label});
                }
            } else if constexpr (std::is_same_v<P, SignBitPredicate>) {
                matches.push_back({{reg.qubit(reg.width - 1)}, 1u});
            } else {
                if (pred.pattern >= limit) {
                    throw std::invalid_argument("pattern does not fit register '" + reg.name +
                                                "'");
                }
                matches.push_back({all, pred.pattern});
            }
        },
        spec.predicate);

    Circuit c(layout.num_qubits());
    const bool trick = spec.construction == OracleConstruction::AncillaTrick;
    if (trick) {
        c.x(ancilla);
        c.h(ancilla);
    }
    for (const auto& [qubits, bits] : matches) {
        flip_on_match(c, qubits, bits, ancilla, spec.construction);
    }
    if (trick) {
        c.h(ancilla);
        c.x(ancilla);
    }
    return c;
}

Circuit zero_phase_flip(std::span<const int> qubits, int num_qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("zero_phase_flip: no qubits");
    }
    Circuit c(num_qubits);
    for (int q : qubits) {
        c.x(q);
    }
    c.z(qubits[0], std::vector<int>(qubits.begin() + 1, qubits.end()));
    for (int q : qubits) {
        c.x(q);
    }
    return c;
}

Circuit reflect_about_zero(std::span<const int> qubits, int num_qubits) {
    Circuit c = zero_phase_flip(qubits, num_qubits);
    // ZXZX is -I, turning I - 2|0><0| into 2|0><0| - I.
    const int q = qubits[0];
    c.z(q).x(q).z(q).x(q);
    return c;
}

Circuit diffusion(const std::string& register_name, const RegisterLayout& layout) {
    const std::vector<int> qubits = layout.get(register_name).qubits();
    Circuit c(layout.num_qubits());
    for (int q : qubits) {
        c.h(q);
    }
    c.append(reflect_about_zero(qubits, layout.num_qubits()));
    for (int q : qubits) {
        c.h(q);
    }
    return c;
}

PhaseEstimationResult phase_estimation(const PhaseEstimationConfig& config) {
    PhaseEstimationResult result;
    result.histogram = estimate_phases(config.eigenprep, config.unitary, config.control_width);

    QuantumState psi(config.eigenprep.num_qubits());
    run(config.eigenprep, psi);
    const QuantumState u_psi = run(config.unitary, std::as_const(psi));
    const Complex ratio = inner_product(u_psi.amplitudes(), psi.amplitudes());
    double residual = 0.0;
    for (std::uint64_t i = 0; i < psi.size(); ++i) {
        residual += std::norm(u_psi[i] - ratio * psi[i]);
    }
    result.eigen_residual = std::sqrt(residual);
    result.eigenstate = result.eigen_residual < 1e-9;
    return result;
}

PhaseEstimationConfig coin_phase_config(double p, int control_width) {
    if (control_width < 1 || control_width > kMaxQubits - 1) {
        throw std::invalid_argument("control_width out of range");
    }
    const double theta = p * kTwoPi / static_cast<double>(std::uint64_t{1} << control_width);
    PhaseEstimationConfig config;
    config.control_width = control_width;
    config.unitary = Circuit(1);
    config.unitary.ry(2.0 * theta, 0);
    config.eigenprep = Circuit(1);
    config.eigenprep.h(0).phase(-kPi / 2.0, 0);
    return config;
}

OutcomeHistogram grover_search(const OracleSpec& oracle, int width, int iterations) {
    if (iterations < 0) {
        throw std::invalid_argument("iterations must be non-negative");
    }
    RegisterLayout layout;
    layout.add(oracle.register_name, width).add(oracle.ancilla, 1);
    const Circuit o = build_oracle(oracle, layout);
    const Circuit d = diffusion(oracle.register_name, layout);

    QuantumState state(layout.num_qubits());
    for (int q : layout.get(oracle.register_name).qubits()) {
        apply(GateApplication{GateKind::H, 0.0, q, -1, {}}, state);
    }
    for (int k = 0; k < iterations; ++k) {
        run(o, state);
        run(d, state);
    }
    return marginal(probabilities(state), layout, oracle.register_name);
}

QuantumState amplitude_amplify(const Circuit& prep, const RegisterLayout& layout,
                               const OracleSpec& oracle, int iterations) {
    check_width(prep, layout);
    if (iterations < 0) {
        throw std::invalid_argument("iterations must be non-negative");
    }
    const int n = layout.num_qubits();
    Circuit iterate = build_oracle(oracle, layout);
    iterate.append(inverse(prep));
    iterate.append(reflect_about_zero(iota_qubits(0, n), n));
    iterate.append(prep);

    QuantumState state(n);
    run(prep, state);
    for (int k = 0; k < iterations; ++k) {
        run(iterate, state);
    }
    return state;
}

int optimal_iterations(double fraction) {
    if (!(fraction > 0.0) || fraction > 1.0) {
        return 0;
    }
    const double theta = std::asin(std::sqrt(fraction));
    // The epsilon keeps exact ratios such as fraction 1/2 from flooring low.
    return static_cast<int>(std::floor(kPi / (4.0 * theta) + 1e-9));
}

CountingResult interpret_counting(OutcomeHistogram histogram, int control_width,
                                  int count_width) {
    CountingResult r;
    r.control_width = control_width;
    r.count_width = count_width;
    const std::uint64_t n_outcomes = std::uint64_t{1} << control_width;
    double best = -1.0;
    for (const auto& [index, p] : histogram.probabilities) {
        // Ascending iteration: a later index only wins by a clear margin.
        if (p > best + 1e-9) {
            best = p;
            r.top_outcome = index;
        }
    }
    r.mirror_outcome = (n_outcomes - r.top_outcome) % n_outcomes;
    const double c = std::cos(static_cast<double>(r.top_outcome) * kPi /
                              static_cast<double>(n_outcomes));
    r.estimated_fraction = c * c;
    const double scale = static_cast<double>(std::uint64_t{1} << count_width);
    r.estimated_count = static_cast<std::uint64_t>(std::llround(scale * r.estimated_fraction));

    bool extreme;
    if (count_width > 0) {
        extreme = r.estimated_count == 0 ||
                  r.estimated_count == (std::uint64_t{1} << count_width);
    } else {
        extreme = r.top_outcome == 0 || r.top_outcome == n_outcomes / 2;
    }
    r.resolution_flag = extreme && best < 1.0 - 1e-6;
    r.histogram = std::move(histogram);
    return r;
}

CountingResult quantum_count(const Circuit& prep, const RegisterLayout& layout,
                             const OracleSpec& oracle, int control_width, int count_width) {
    check_width(prep, layout);
    if (control_width < 2) {
        throw std::invalid_argument("control_width must be at least 2 for counting");
    }
    if (count_width < 0 || count_width > 62) {
        throw std::invalid_argument("count_width out of range");
    }
    if (control_width + layout.num_qubits() > kMaxQubits) {
        throw std::invalid_argument("counting circuit needs " +
                                    std::to_string(control_width + layout.num_qubits()) +
                                    " qubits, above the simulator cap of " +
                                    std::to_string(kMaxQubits));
    }
    const int n = layout.num_qubits();
    Circuit iterate = build_oracle(oracle, layout);
    iterate.append(inverse(prep));
    iterate.append(zero_phase_flip(iota_qubits(0, n), n));
    iterate.append(prep);
    return interpret_counting(estimate_phases(prep, iterate, control_width), control_width,
                              count_width);
}

CountingResult quantum_count_uniform(const OracleSpec& oracle, int width, int control_width) {
    RegisterLayout layout;
    layout.add(oracle.register_name, width).add(oracle.ancilla, 1);
    Circuit prep(layout.num_qubits());
    for (int q : layout.get(oracle.register_name).qubits()) {
        prep.h(q);
    }
    return quantum_count(prep, layout, oracle, control_width, width);
}

double estimate_amplitude(const Circuit& prep, const RegisterLayout& layout,
                          const OracleSpec& oracle, int control_width) {
    return quantum_count(prep, layout, oracle, control_width, 0).estimated_fraction;
}

}  // namespace qpatterns
