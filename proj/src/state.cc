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

#include "qpatterns/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qpatterns {

bool PairTransform::is_unitary(double tol) const {
    const double col0 = std::norm(c00) + std::norm(c10);
    const double col1 = std::norm(c01) + std::norm(c11);
    const Complex cross = c00 * std::conj(c01) + c10 * std::conj(c11);
    return std::abs(col0 - 1.0) < tol && std::abs(col1 - 1.0) < tol && std::abs(cross) < tol;
}

QuantumState::QuantumState(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("QuantumState: num_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(num_qubits));
    }
    amplitudes_.assign(std::uint64_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

QuantumState QuantumState::from_amplitudes(ComplexSequence amplitudes) {
    const std::uint64_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("QuantumState: amplitude count must be a power of two >= 2");
    }
    const int width = std::countr_zero(n);
    if (width > kMaxQubits) {
        throw std::invalid_argument("QuantumState: too many amplitudes");
    }
    QuantumState s;
    s.num_qubits_ = width;
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double QuantumState::norm_squared() const {
    double acc = 0.0;
    for (const auto& a : amplitudes_) {
        acc += std::norm(a);
    }
    return acc;
}

std::uint64_t QuantumState::control_mask(std::span<const int> controls,
                                         std::uint64_t exclude) const {
    std::uint64_t mask = 0;
    for (int c : controls) {
        if (c < 0 || c >= num_qubits_) {
            throw std::invalid_argument("control qubit " + std::to_string(c) + " out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (bit & exclude) {
            throw std::invalid_argument("control qubit " + std::to_string(c) +
                                        " overlaps a target");
        }
        mask |= bit;
    }
    return mask;
}

void QuantumState::apply_pair_transform(const PairTransform& t, int target,
                                        std::span<const int> controls) {
    if (target < 0 || target >= num_qubits_) {
        throw std::invalid_argument("target qubit " + std::to_string(target) + " out of range");
    }
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t cmask = control_mask(controls, tbit);
    const std::uint64_t fixed = cmask | tbit;
    const std::uint64_t dim = amplitudes_.size();
    Complex* amps = amplitudes_.data();
    // Real arithmetic: std::complex products take a slow NaN-checking path.
    const double c00r = t.c00.real(), c00i = t.c00.imag(), c01r = t.c01.real(), c01i = t.c01.imag();
    const double c10r = t.c10.real(), c10i = t.c10.imag(), c11r = t.c11.real(), c11i = t.c11.imag();
    // Walk every index whose fixed bits are all zero, then force the control
    // bits on. Only control-satisfying pairs are visited.
    for (std::uint64_t x = 0; x < dim; x = ((x | fixed) + 1) & ~fixed) {
        const std::uint64_t i0 = x | cmask;
        const std::uint64_t i1 = i0 | tbit;
        const double r0 = amps[i0].real(), m0 = amps[i0].imag();
        const double r1 = amps[i1].real(), m1 = amps[i1].imag();
        amps[i0] = {c00r * r0 - c00i * m0 + c01r * r1 - c01i * m1,
                    c00r * m0 + c00i * r0 + c01r * m1 + c01i * r1};
        amps[i1] = {c10r * r0 - c10i * m0 + c11r * r1 - c11i * m1,
                    c10r * m0 + c10i * r0 + c11r * m1 + c11i * r1};
    }
}

void QuantumState::apply_swap(int a, int b, std::span<const int> controls) {
    if (a < 0 || a >= num_qubits_ || b < 0 || b >= num_qubits_) {
        throw std::invalid_argument("swap qubit out of range");
    }
    if (a == b) {
        throw std::invalid_argument("swap needs two distinct qubits");
    }
    const std::uint64_t abit = std::uint64_t{1} << a;
    const std::uint64_t bbit = std::uint64_t{1} << b;
    const std::uint64_t cmask = control_mask(controls, abit | bbit);
    const std::uint64_t fixed = cmask | abit | bbit;
    const std::uint64_t dim = amplitudes_.size();
    for (std::uint64_t x = 0; x < dim; x = ((x | fixed) + 1) & ~fixed) {
        const std::uint64_t base = x | cmask;
        std::swap(amplitudes_[base | abit], amplitudes_[base | bbit]);
    }
}

std::vector<int> Register::qubits() const {
    std::vector<int> out(width);
    for (int b = 0; b < width; ++b) {
        out[b] = offset + b;
    }
    return out;
}

RegisterLayout& RegisterLayout::add(std::string name, int width) {
    if (width < 1) {
        throw std::invalid_argument("register '" + name + "' must have width >= 1");
    }
    if (contains(name)) {
        throw std::invalid_argument("duplicate register '" + name + "'");
    }
    registers_.push_back(Register{std::move(name), num_qubits_, width});
    num_qubits_ += width;
    return *this;
}

const Register& RegisterLayout::get(std::string_view name) const {
    for (const auto& r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::invalid_argument("unknown register '" + std::string(name) + "'");
}

bool RegisterLayout::contains(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const Register& r) { return r.name == name; });
}

int OutcomeHistogram::width() const {
    int w = 0;
    for (const auto& f : fields) {
        w += f.width;
    }
    return w;
}

double OutcomeHistogram::probability(std::uint64_t index) const {
    auto it = probabilities.find(index);
    return it == probabilities.end() ? 0.0 : it->second;
}

std::uint64_t OutcomeHistogram::count(std::uint64_t index) const {
    auto it = counts.find(index);
    return it == counts.end() ? 0 : it->second;
}

std::string OutcomeHistogram::label(std::uint64_t index) const {
    std::string out;
    int shift = 0;
    for (std::size_t f = 0; f < fields.size(); ++f) {
        if (f > 0) {
            out += '|';
        }
        for (int b = fields[f].width - 1; b >= 0; --b) {
            out += ((index >> (shift + b)) & 1) ? '1' : '0';
        }
        shift += fields[f].width;
    }
    return out;
}

OutcomeSampler::OutcomeSampler(std::uint64_t seed) : engine_(seed) {}

double OutcomeSampler::next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t OutcomeSampler::draw(std::span<const double> masses) {
    if (masses.empty()) {
        throw std::invalid_argument("cannot sample an empty distribution");
    }
    double total = 0.0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t i = 0; i < masses.size(); ++i) {
        total += masses[i];
        if (masses[i] > 0.0) {
            last_nonzero = i;
        }
    }
    const double u = next_uniform() * total;
    double cumulative = 0.0;
    for (std::uint64_t i = 0; i < masses.size(); ++i) {
        cumulative += masses[i];
        if (masses[i] > 0.0 && cumulative > u) {
            return i;
        }
    }
    return last_nonzero;
}

std::uint64_t OutcomeSampler::draw(const OutcomeHistogram& exact) {
    std::vector<std::uint64_t> keys;
    std::vector<double> masses;
    keys.reserve(exact.probabilities.size());
    masses.reserve(exact.probabilities.size());
    for (const auto& [index, p] : exact.probabilities) {
        keys.push_back(index);
        masses.push_back(p);
    }
    return keys[draw(masses)];
}

OutcomeHistogram probabilities(const QuantumState& state) {
    OutcomeHistogram h;
    h.fields = {LabelField{"q", state.num_qubits()}};
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        h.probabilities.emplace_hint(h.probabilities.end(), i, std::norm(amps[i]));
    }
    return h;
}

OutcomeHistogram probabilities(std::span<const double> masses, int width) {
    if (width < 0 || width > 63 || masses.size() != (std::uint64_t{1} << width)) {
        throw std::invalid_argument("probabilities: mass count must equal 2^width");
    }
    OutcomeHistogram h;
    h.fields = {LabelField{"q", width}};
    for (std::uint64_t i = 0; i < masses.size(); ++i) {
        h.probabilities.emplace_hint(h.probabilities.end(), i, masses[i]);
    }
    return h;
}

OutcomeHistogram sample(const OutcomeHistogram& exact, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    std::vector<std::uint64_t> keys;
    std::vector<double> masses;
    for (const auto& [index, p] : exact.probabilities) {
        keys.push_back(index);
        masses.push_back(p);
    }
    OutcomeHistogram h;
    h.fields = exact.fields;
    h.shots = shots;
    h.seed = seed;
    OutcomeSampler sampler(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++h.counts[keys[sampler.draw(masses)]];
    }
    for (const auto& [index, c] : h.counts) {
        h.probabilities[index] = static_cast<double>(c) / static_cast<double>(shots);
    }
    return h;
}

OutcomeHistogram sample(const QuantumState& state, std::uint64_t shots, std::uint64_t seed) {
    return sample(probabilities(state), shots, seed);
}

OutcomeHistogram marginal(const OutcomeHistogram& hist, const RegisterLayout& layout,
                          std::span<const std::string> register_names) {
    if (register_names.empty()) {
        throw std::invalid_argument("marginal: no registers named");
    }
    if (hist.width() < layout.num_qubits()) {
        throw std::invalid_argument("marginal: histogram narrower than the register layout");
    }
    std::vector<const Register*> regs;
    OutcomeHistogram out;
    for (const auto& name : register_names) {
        const Register& r = layout.get(name);
        regs.push_back(&r);
        out.fields.push_back(LabelField{r.name, r.width});
    }
    auto project = [&](std::uint64_t index) {
        std::uint64_t packed = 0;
        int shift = 0;
        for (const Register* r : regs) {
            packed |= r->value_of(index) << shift;
            shift += r->width;
        }
        return packed;
    };
    for (const auto& [index, p] : hist.probabilities) {
        out.probabilities[project(index)] += p;
    }
    for (const auto& [index, c] : hist.counts) {
        out.counts[project(index)] += c;
    }
    out.shots = hist.shots;
    out.seed = hist.seed;
    return out;
}

OutcomeHistogram marginal(const OutcomeHistogram& hist, const RegisterLayout& layout,
                          const std::string& register_name) {
    const std::string names[] = {register_name};
    return marginal(hist, layout, names);
}

}  // namespace qpatterns
