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

#include "qpatterns/qdict.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace qpatterns {

namespace {

/// One encoded contribution: `weight` is added to every key whose bits in
/// `ones` are set and whose bits in `zeros` are clear.
struct Term {
    std::int64_t weight = 0;
    std::vector<int> ones;
    std::vector<int> zeros;
};

int key_bit(const Polynomial& poly, int var, int key_width) {
    return poly.order == VariableOrder::MsbFirst ? key_width - 1 - var : var;
}

void check_polynomial(const Polynomial& poly, int key_width) {
    const int vars = poly.num_variables();
    if (vars > key_width) {
        throw std::invalid_argument("polynomial uses " + std::to_string(vars) +
                                    " variables but key_width is " + std::to_string(key_width));
    }
    for (const auto& q : poly.quadratic) {
        if (q.i < 0 || q.j < 0 || q.i == q.j) {
            throw std::invalid_argument("quadratic term (" + std::to_string(q.i) + ", " +
                                        std::to_string(q.j) + ") needs two distinct variables");
        }
    }
}

void check_source(const DictionarySpec& spec, const EncodingSource& source) {
    const std::uint64_t keys = std::uint64_t{1} << spec.key_width;
    if (const auto* t = std::get_if<CompleteTable>(&source)) {
        if (t->values.size() != keys) {
            throw std::invalid_argument("table has " + std::to_string(t->values.size()) +
                                        " values; key_width " + std::to_string(spec.key_width) +
                                        " needs " + std::to_string(keys));
        }
    } else if (const auto* p = std::get_if<PartialTable>(&source)) {
        std::set<std::uint64_t> seen;
        for (const auto& [k, v] : p->entries) {
            if (k >= keys) {
                throw std::invalid_argument("key " + std::to_string(k) + " does not fit key_width " +
                                            std::to_string(spec.key_width));
            }
            if (!seen.insert(k).second) {
                throw std::invalid_argument("key " + std::to_string(k) + " appears twice");
            }
        }
    } else {
        check_polynomial(std::get<Polynomial>(source), spec.key_width);
    }
}

std::vector<Term> terms_of(const DictionarySpec& spec, const EncodingSource& source) {
    const int n = spec.key_width;
    std::vector<Term> terms;
    if (const auto* t = std::get_if<CompleteTable>(&source)) {
        for (std::uint64_t k = 0; k < t->values.size(); ++k) {
            Term term{t->values[k], {}, {}};
            for (int b = 0; b < n; ++b) {
                ((k >> b) & 1 ? term.ones : term.zeros).push_back(b);
            }
            terms.push_back(std::move(term));
        }
    } else if (const auto* p = std::get_if<PartialTable>(&source)) {
        for (const auto& [k, v] : p->entries) {
            Term term{v, {}, {}};
            for (int b = 0; b < n; ++b) {
                if ((k >> b) & 1) {
                    term.ones.push_back(b);
                }
            }
            terms.push_back(std::move(term));
        }
    } else {
        const auto& poly = std::get<Polynomial>(source);
        terms.push_back({poly.constant, {}, {}});
        for (std::size_t i = 0; i < poly.linear.size(); ++i) {
            terms.push_back({poly.linear[i], {key_bit(poly, static_cast<int>(i), n)}, {}});
        }
        for (const auto& q : poly.quadratic) {
            terms.push_back({q.coefficient, {key_bit(poly, q.i, n), key_bit(poly, q.j, n)}, {}});
        }
    }
    return terms;
}

void check_range(const std::vector<std::int64_t>& values, int m, bool require_signed) {
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const std::int64_t lo = *lo_it;
    const std::int64_t hi = *hi_it;
    const std::int64_t size = std::int64_t{1} << m;
    if (!require_signed && lo >= 0) {
        if (hi >= size) {
            throw std::invalid_argument("value " + std::to_string(hi) + " does not fit value_width " +
                                        std::to_string(m) + " (max " + std::to_string(size - 1) +
                                        ")");
        }
        return;
    }
    const std::int64_t half = size / 2;
    if (lo < -half || hi >= half) {
        throw std::invalid_argument("values span [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "], outside the signed range of value_width " +
                                    std::to_string(m) + " [" + std::to_string(-half) + ", " +
                                    std::to_string(half - 1) + "]");
    }
}

/// Smallest m >= floor whose signed range holds [lo, hi].
int signed_width(std::int64_t lo, std::int64_t hi, int floor) {
    int m = std::max(floor, 1);
    while (lo < -(std::int64_t{1} << (m - 1)) || hi >= (std::int64_t{1} << (m - 1))) {
        ++m;
    }
    return m;
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

OracleSpec value_oracle(OraclePredicate predicate) {
    return OracleSpec{std::move(predicate), kValueRegister, OracleConstruction::ZXZX,
                      kAncillaRegister};
}

const std::vector<std::string>& key_value_names() {
    static const std::vector<std::string> names = {kKeyRegister, kValueRegister};
    return names;
}

}  // namespace

double DictionarySpec::base_angle() const {
    return kTwoPi / static_cast<double>(std::uint64_t{1} << value_width);
}

void DictionarySpec::validate() const {
    if (key_width < 1) {
        throw std::invalid_argument("key_width must be at least 1");
    }
    if (value_width < 1) {
        throw std::invalid_argument("value_width must be at least 1");
    }
    if (key_width + value_width + 1 > kMaxQubits) {
        throw std::invalid_argument("key_width + value_width + 1 exceeds the simulator cap of " +
                                    std::to_string(kMaxQubits) + " qubits");
    }
}

int Polynomial::num_variables() const {
    int vars = static_cast<int>(linear.size());
    for (const auto& q : quadratic) {
        vars = std::max({vars, q.i + 1, q.j + 1});
    }
    return vars;
}

std::int64_t Polynomial::evaluate(std::uint64_t key, int key_width) const {
    auto x = [&](int var) -> std::int64_t {
        return (key >> key_bit(*this, var, key_width)) & 1;
    };
    std::int64_t f = constant;
    for (std::size_t i = 0; i < linear.size(); ++i) {
        f += linear[i] * x(static_cast<int>(i));
    }
    for (const auto& q : quadratic) {
        f += q.coefficient * x(q.i) * x(q.j);
    }
    return f;
}

SignedValue decode_value(std::uint64_t raw, const DictionarySpec& spec) {
    const std::uint64_t size = std::uint64_t{1} << spec.value_width;
    if (raw >= size) {
        throw std::invalid_argument("raw value " + std::to_string(raw) + " does not fit value_width " +
                                    std::to_string(spec.value_width));
    }
    SignedValue v;
    v.raw = raw;
    v.value = raw >= size / 2 ? static_cast<std::int64_t>(raw) - static_cast<std::int64_t>(size)
                              : static_cast<std::int64_t>(raw);
    return v;
}

std::vector<std::int64_t> classical_values(const DictionarySpec& spec, const EncodingSource& source,
                                           std::int64_t offset) {
    spec.validate();
    check_source(spec, source);
    const std::uint64_t keys = std::uint64_t{1} << spec.key_width;
    std::vector<std::int64_t> values(keys, offset);
    for (const Term& term : terms_of(spec, source)) {
        for (std::uint64_t k = 0; k < keys; ++k) {
            const bool hit =
                std::all_of(term.ones.begin(), term.ones.end(), [&](int b) { return (k >> b) & 1; }) &&
                std::none_of(term.zeros.begin(), term.zeros.end(), [&](int b) { return (k >> b) & 1; });
            if (hit) {
                values[k] += term.weight;
            }
        }
    }
    return values;
}

RegisterLayout dictionary_layout(const DictionarySpec& spec) {
    spec.validate();
    RegisterLayout layout;
    layout.add(kKeyRegister, spec.key_width)
        .add(kValueRegister, spec.value_width)
        .add(kAncillaRegister, 1);
    return layout;
}

Circuit encode(const DictionarySpec& spec, const EncodingSource& source, std::int64_t offset,
               bool require_signed) {
    check_range(classical_values(spec, source, offset), spec.value_width, require_signed);

    const RegisterLayout layout = dictionary_layout(spec);
    const Register& key = layout.get(kKeyRegister);
    const Register& value = layout.get(kValueRegister);
    const int anc = layout.get(kAncillaRegister).qubit(0);
    const std::int64_t size = std::int64_t{1} << spec.value_width;

    std::vector<Term> terms = terms_of(spec, source);
    terms.push_back({offset, {}, {}});

    Circuit c(layout.num_qubits());
    for (int q : key.qubits()) {
        c.h(q);
    }
    for (int q : value.qubits()) {
        c.h(q);
    }
    // (i, 1)/sqrt(2) up to a global phase: RY(2a) multiplies it by e^{ia}.
    c.h(anc).phase(-kPi / 2.0, anc);
    for (const Term& term : terms) {
        if (term.weight == 0) {
            continue;
        }
        for (int q : term.zeros) {
            c.x(key.qubit(q));
        }
        std::vector<int> controls;
        for (int b : term.ones) {
            controls.push_back(key.qubit(b));
        }
        for (int b : term.zeros) {
            controls.push_back(key.qubit(b));
        }
        for (int j = 0; j < spec.value_width; ++j) {
            // Reduce c * 2^j mod 2^m first so the angle is exact.
            const std::int64_t steps = positive_mod(positive_mod(term.weight, size) << j, size);
            if (steps == 0) {
                continue;
            }
            const double alpha = kTwoPi * static_cast<double>(steps) / static_cast<double>(size);
            std::vector<int> ctl = controls;
            ctl.push_back(value.qubit(j));
            c.ry(2.0 * alpha, anc, std::move(ctl));
        }
        for (int q : term.zeros) {
            c.x(key.qubit(q));
        }
    }
    c.append(qft_circuit(value.qubits(), layout.num_qubits(), /*inverse=*/true));
    c.phase(kPi / 2.0, anc).h(anc);
    return c;
}

OutcomeHistogram encoded_histogram(const DictionarySpec& spec, const EncodingSource& source) {
    const RegisterLayout layout = dictionary_layout(spec);
    const QuantumState state = run(encode(spec, source), QuantumState(layout.num_qubits()));
    return marginal(probabilities(state), layout, key_value_names());
}

OutcomeHistogram value_marginal(const DictionarySpec& spec, const EncodingSource& source) {
    const RegisterLayout layout = dictionary_layout(spec);
    const QuantumState state = run(encode(spec, source), QuantumState(layout.num_qubits()));
    return marginal(probabilities(state), layout, kValueRegister);
}

PartialTable sum_inputs_source(const std::vector<std::int64_t>& inputs) {
    if (inputs.empty() || inputs.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("inputs: need between 1 and " + std::to_string(kMaxQubits) +
                                    " numbers");
    }
    PartialTable t;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        t.entries.emplace_back(std::uint64_t{1} << i, inputs[i]);
    }
    return t;
}

Circuit encode_sum_inputs(const DictionarySpec& spec, const std::vector<std::int64_t>& inputs) {
    if (static_cast<int>(inputs.size()) != spec.key_width) {
        throw std::invalid_argument("inputs: expected " + std::to_string(spec.key_width) +
                                    " numbers, one per key bit");
    }
    return encode(spec, sum_inputs_source(inputs));
}

Circuit encode_multiplication(const DictionarySpec& spec, std::int64_t x0) {
    spec.validate();
    std::vector<std::int64_t> inputs;
    for (int t = 0; t < spec.key_width; ++t) {
        inputs.push_back(x0 * (std::int64_t{1} << t));
    }
    return encode_sum_inputs(spec, inputs);
}

CompleteTable distribution_table(int key_width,
                                 const std::vector<std::pair<std::int64_t, double>>& masses) {
    if (key_width < 1 || key_width > kMaxQubits) {
        throw std::invalid_argument("key_width out of range");
    }
    const std::uint64_t keys = std::uint64_t{1} << key_width;
    if (masses.empty()) {
        throw std::invalid_argument("masses: empty distribution");
    }
    if (masses.size() > keys) {
        throw std::invalid_argument("masses: " + std::to_string(masses.size()) +
                                    " distinct values but only " + std::to_string(keys) + " keys");
    }
    auto sorted = masses;
    std::sort(sorted.begin(), sorted.end());
    double total = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!(sorted[i].second >= 0.0) || !std::isfinite(sorted[i].second)) {
            throw std::invalid_argument("masses: probability of value " +
                                        std::to_string(sorted[i].first) + " is not a finite p >= 0");
        }
        if (i > 0 && sorted[i].first == sorted[i - 1].first) {
            throw std::invalid_argument("masses: value " + std::to_string(sorted[i].first) +
                                        " listed twice");
        }
        total += sorted[i].second;
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::invalid_argument("masses: probabilities sum to " + std::to_string(total) +
                                    ", not 1");
    }

    std::vector<std::uint64_t> alloc(sorted.size());
    std::vector<double> remainder(sorted.size());
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double quota = static_cast<double>(keys) * sorted[i].second / total;
        alloc[i] = static_cast<std::uint64_t>(std::floor(quota));
        remainder[i] = quota - static_cast<double>(alloc[i]);
        used += alloc[i];
    }
    std::vector<std::size_t> order(sorted.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t i = 0; used < keys; i = (i + 1) % order.size()) {
        ++alloc[order[i]];
        ++used;
    }

    CompleteTable table;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        table.values.insert(table.values.end(), alloc[i], sorted[i].first);
    }
    return table;
}

Circuit encode_distribution(const DictionarySpec& spec,
                            const std::vector<std::pair<std::int64_t, double>>& masses) {
    return encode(spec, distribution_table(spec.key_width, masses));
}

std::vector<std::pair<std::int64_t, double>> poisson_masses(double lambda, int value_width) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("lambda must be positive");
    }
    if (value_width < 1 || value_width > kMaxQubits) {
        throw std::invalid_argument("value_width out of range");
    }
    const std::int64_t size = std::int64_t{1} << value_width;
    std::vector<std::pair<std::int64_t, double>> out;
    double total = 0.0;
    for (std::int64_t v = 0; v < size; ++v) {
        const double p = std::exp(static_cast<double>(v) * std::log(lambda) - lambda -
                                  std::lgamma(static_cast<double>(v) + 1.0));
        out.emplace_back(v, p);
        total += p;
    }
    for (auto& [v, p] : out) {
        p /= total;
    }
    return out;
}

PartialTable binomial_source(int key_width) {
    return sum_inputs_source(std::vector<std::int64_t>(std::max(key_width, 0), 1));
}

Circuit encode_binomial(int key_width, int value_width) {
    const DictionarySpec spec{key_width, value_width};
    spec.validate();
    if (static_cast<std::uint64_t>(key_width) >= (std::uint64_t{1} << value_width)) {
        throw std::invalid_argument("value_width " + std::to_string(value_width) +
                                    " cannot hold the count " + std::to_string(key_width));
    }
    return encode(spec, binomial_source(key_width));
}

int default_lookup_iterations(int key_width) {
    return optimal_iterations(1.0 / static_cast<double>(std::uint64_t{1} << key_width));
}

OutcomeHistogram lookup(const DictionarySpec& spec, const EncodingSource& source, std::uint64_t key,
                        std::optional<int> iterations) {
    const RegisterLayout layout = dictionary_layout(spec);
    if (key >= (std::uint64_t{1} << spec.key_width)) {
        throw std::invalid_argument("key " + std::to_string(key) + " does not fit key_width " +
                                    std::to_string(spec.key_width));
    }
    const int k = iterations.value_or(default_lookup_iterations(spec.key_width));
    const OracleSpec oracle{KeyMatchPredicate{key}, kKeyRegister, OracleConstruction::ZXZX,
                            kAncillaRegister};
    const QuantumState state = amplitude_amplify(encode(spec, source), layout, oracle, k);
    return marginal(probabilities(state), layout, key_value_names());
}

CountingResult count_value_eq(const DictionarySpec& spec, const EncodingSource& source,
                              std::int64_t target, int control_width) {
    spec.validate();
    const std::int64_t size = std::int64_t{1} << spec.value_width;
    if (target < -size / 2 || target >= size) {
        throw std::invalid_argument("target " + std::to_string(target) +
                                    " is not representable in value_width " +
                                    std::to_string(spec.value_width));
    }
    const bool needs_sign = target < 0;
    const Circuit prep = encode(spec, source, 0, needs_sign);
    const auto label = static_cast<std::uint64_t>(positive_mod(target, size));
    return quantum_count(prep, dictionary_layout(spec),
                         value_oracle(ExplicitSetPredicate{{label}}), control_width,
                         spec.key_width);
}

CountingResult count_value_lt(const DictionarySpec& spec, const EncodingSource& source,
                              std::int64_t threshold, int control_width) {
    const Circuit prep = encode(spec, source, -threshold, /*require_signed=*/true);
    return quantum_count(prep, dictionary_layout(spec), value_oracle(SignBitPredicate{}),
                         control_width, spec.key_width);
}

int qubo_value_width(const Polynomial& poly, int key_width) {
    const auto values = classical_values(DictionarySpec{key_width, 1}, poly);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    int m = 2;
    while ((std::int64_t{1} << (m - 1)) <= *hi - *lo) {
        ++m;
    }
    return m;
}

QuboResult qubo_minimize(const DictionarySpec& spec, const Polynomial& poly, int control_width,
                         std::uint64_t seed, std::optional<std::uint64_t> query_cap) {
    spec.validate();
    const int n = spec.key_width;
    const std::uint64_t keys = std::uint64_t{1} << n;
    const std::uint64_t cap = query_cap.value_or(4 * keys);
    const auto values = classical_values(spec, poly);
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const std::int64_t lo = *lo_it;
    const std::int64_t hi = *hi_it;

    OutcomeSampler sampler(seed);
    auto draw = [&](const OutcomeHistogram& hist, int m, std::int64_t shift) {
        const std::uint64_t index = sampler.draw(hist);
        const std::uint64_t key = index & (keys - 1);
        const std::int64_t v = decode_value(index >> n, DictionarySpec{n, m}).value + shift;
        return std::pair{key, v};
    };

    QuboResult result;
    const int m_initial = signed_width(lo, hi, spec.value_width);
    std::tie(result.key, result.value) =
        draw(encoded_histogram(DictionarySpec{n, m_initial}, poly), m_initial, 0);
    // m_initial holds [lo, hi] in the signed range, so the signed reading
    // of every raw value is the true value.
    result.initial_key = result.key;
    result.initial_value = result.value;

    while (true) {
        QuboStep step;
        step.threshold = result.value;
        step.value_width = signed_width(lo - result.value, hi - result.value, spec.value_width);
        const DictionarySpec cmp{n, step.value_width};
        step.count = count_value_lt(cmp, poly, result.value, control_width);
        if (step.count.estimated_count == 0) {
            result.trace.push_back(std::move(step));
            break;
        }
        // The rounded count is the sharper estimate of the good fraction.
        const double fraction = std::min(
            1.0, static_cast<double>(step.count.estimated_count) / static_cast<double>(keys));
        const double theta = std::asin(std::sqrt(fraction));
        step.iterations =
            theta > 0.0 ? std::max(0, static_cast<int>(std::lround(kPi / (4.0 * theta) - 0.5))) : 0;
        const std::uint64_t cost = static_cast<std::uint64_t>(std::max(step.iterations, 1));
        if (result.queries + cost > cap) {
            result.cap_reached = true;
            step.iterations = 0;
            result.trace.push_back(std::move(step));
            break;
        }
        result.queries += cost;

        const RegisterLayout layout = dictionary_layout(cmp);
        const Circuit prep = encode(cmp, poly, -result.value, /*require_signed=*/true);
        const QuantumState state =
            amplitude_amplify(prep, layout, value_oracle(SignBitPredicate{}), step.iterations);
        const auto [key, v] =
            draw(marginal(probabilities(state), layout, key_value_names()), cmp.value_width,
                 result.value);
        step.sampled_key = key;
        step.sampled_value = v;
        if (v < result.value) {
            step.improved = true;
            result.key = key;
            result.value = v;
        }
        result.trace.push_back(std::move(step));
    }
    return result;
}

Polynomial fibonacci_polynomial(int key_width) {
    if (key_width < 1) {
        throw std::invalid_argument("key_width must be at least 1");
    }
    Polynomial poly;
    poly.linear.assign(key_width, 0);
    for (int i = 0; i + 1 < key_width; ++i) {
        poly.quadratic.push_back({i, i + 1, 1});
    }
    return poly;
}

int fibonacci_value_width(int key_width) {
    int m = 2;
    while (key_width - 1 >= (1 << (m - 1))) {
        ++m;
    }
    return m;
}

CountingResult fibonacci_count(int key_width, int control_width) {
    const DictionarySpec spec{key_width, fibonacci_value_width(key_width)};
    return count_value_eq(spec, fibonacci_polynomial(key_width), 0, control_width);
}

}  // namespace qpatterns
