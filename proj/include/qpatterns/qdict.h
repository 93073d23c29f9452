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

#ifndef QPATTERNS_QDICT_H
#define QPATTERNS_QDICT_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qpatterns/algorithms.h"
#include "qpatterns/circuits.h"
#include "qpatterns/state.h"

namespace qpatterns {

/// Register names used by every dictionary circuit.
inline constexpr const char* kKeyRegister = "key";
inline constexpr const char* kValueRegister = "value";
inline constexpr const char* kAncillaRegister = "ancilla";

struct DictionarySpec {
    int key_width = 1;
    int value_width = 1;

    /// 2 pi / 2^value_width.
    double base_angle() const;
    /// Throws unless 1 <= n, 1 <= m and n + m + 1 fits the simulator.
    void validate() const;
};

/// One stored value per key, in key order.
struct CompleteTable {
    std::vector<std::int64_t> values;
};

/// Sparse (key, value) entries. Each entry's rotations are controlled only
/// by the key's set bits, so a key k reads the sum of every entry whose key
/// bits are a subset of k's. Entries on single-bit keys therefore give all
/// subset sums.
struct PartialTable {
    std::vector<std::pair<std::uint64_t, std::int64_t>> entries;
};

/// Which key bit carries variable x_i.
///   MsbFirst: x_i sits at key bit n-1-i, so "001" is x_{n-1} = 1.
///   LsbFirst: x_i sits at key bit i, so the key reads as sum x_i 2^i.
enum class VariableOrder { MsbFirst, LsbFirst };

struct QuadraticTerm {
    int i = 0;
    int j = 0;
    std::int64_t coefficient = 0;
};

/// constant + sum l_i x_i + sum q_ij x_i x_j over binary x.
struct Polynomial {
    std::int64_t constant = 0;
    std::vector<std::int64_t> linear;
    std::vector<QuadraticTerm> quadratic;
    VariableOrder order = VariableOrder::MsbFirst;

    /// Number of variables referenced: linear.size() or the largest
    /// quadratic index + 1, whichever is larger.
    int num_variables() const;
    /// f at the assignment read from `key` under `order`.
    std::int64_t evaluate(std::uint64_t key, int key_width) const;
};

using EncodingSource = std::variant<CompleteTable, PartialTable, Polynomial>;

struct SignedValue {
    std::uint64_t raw = 0;
    std::int64_t value = 0;  // two's complement reading of raw
};

/// raw in [0, 2^m) read both as unsigned and as two's complement.
SignedValue decode_value(std::uint64_t raw, const DictionarySpec& spec);

/// Classical f(k) + offset for every key, with no range check.
std::vector<std::int64_t> classical_values(const DictionarySpec& spec, const EncodingSource& source,
                                           std::int64_t offset = 0);

/// key [0, n), value [n, n + m), ancilla (one qubit) after them. The
/// ancilla hosts the rotation eigenstate during encoding and is |0> again
/// afterwards, so oracles reuse it.
RegisterLayout dictionary_layout(const DictionarySpec& spec);

/// Encoding circuit over dictionary_layout(spec). Every branch k ends in
/// |k>|f(k) + offset mod 2^m>|0> with amplitude 2^{-n/2}. Throws
/// std::invalid_argument if a value does not fit: nonnegative values must
/// lie in [0, 2^m); with any negative value (or `require_signed`) all must
/// lie in [-2^{m-1}, 2^{m-1}).
Circuit encode(const DictionarySpec& spec, const EncodingSource& source, std::int64_t offset = 0,
               bool require_signed = false);

/// Exact key|value histogram of the encoded state.
OutcomeHistogram encoded_histogram(const DictionarySpec& spec, const EncodingSource& source);

/// Exact value-register histogram of the encoded state.
OutcomeHistogram value_marginal(const DictionarySpec& spec, const EncodingSource& source);

/// inputs[t] stored on the key with only bit t set.
PartialTable sum_inputs_source(const std::vector<std::int64_t>& inputs);
Circuit encode_sum_inputs(const DictionarySpec& spec, const std::vector<std::int64_t>& inputs);

/// sum_inputs with inputs 2^t x0, so key k maps to k x0.
Circuit encode_multiplication(const DictionarySpec& spec, std::int64_t x0);

/// Keys per value by largest-remainder rounding of 2^n P(v): floors first,
/// then one extra key to the largest remainders (ties to the smaller
/// value). Values with zero keys are dropped. Values are laid out on
/// consecutive keys in ascending value order.
CompleteTable distribution_table(int key_width,
                                 const std::vector<std::pair<std::int64_t, double>>& masses);
Circuit encode_distribution(const DictionarySpec& spec,
                            const std::vector<std::pair<std::int64_t, double>>& masses);

/// Poisson(lambda) pmf on 0..2^m-1, renormalized over that window.
std::vector<std::pair<std::int64_t, double>> poisson_masses(double lambda, int value_width);

/// Value 1 on every power-of-two key; the value marginal is Binomial(n, 1/2).
PartialTable binomial_source(int key_width);
Circuit encode_binomial(int key_width, int value_width);

/// Grover iterations on the key register. Default: optimal_iterations(2^-n).
int default_lookup_iterations(int key_width);

/// Amplifies the branch whose key equals `key`; returns the key|value
/// histogram.
OutcomeHistogram lookup(const DictionarySpec& spec, const EncodingSource& source, std::uint64_t key,
                        std::optional<int> iterations = std::nullopt);

/// Counts keys with f(k) == target. The count multiplier is 2^key_width.
CountingResult count_value_eq(const DictionarySpec& spec, const EncodingSource& source,
                              std::int64_t target, int control_width);

/// Counts keys with f(k) < threshold by encoding f - threshold and marking
/// the sign bit. The shifted values must fit the signed range.
CountingResult count_value_lt(const DictionarySpec& spec, const EncodingSource& source,
                              std::int64_t threshold, int control_width);

/// Smallest value width m >= 2 such that f(k) - b fits the signed range
/// for every b between min f and max f.
int qubo_value_width(const Polynomial& poly, int key_width);

struct QuboStep {
    /// Best value going into this step.
    std::int64_t threshold = 0;
    /// Value width used for the comparison.
    int value_width = 0;
    CountingResult count;
    /// Amplification iterations used for the better sample (0 if none).
    int iterations = 0;
    std::optional<std::uint64_t> sampled_key;
    std::optional<std::int64_t> sampled_value;
    bool improved = false;
};

struct QuboResult {
    std::uint64_t key = 0;
    std::int64_t value = 0;
    std::uint64_t initial_key = 0;
    std::int64_t initial_value = 0;
    std::vector<QuboStep> trace;
    /// Oracle queries spent in amplification steps.
    std::uint64_t queries = 0;
    /// The query cap stopped the descent; key/value are the best so far.
    bool cap_reached = false;
};

/// Iterative descent on a polynomial: sample an initial (key, value), then
/// while count_value_lt(best) is nonzero amplify the keys below the best
/// and measure. Each amplification costs max(k, 1) queries against a cap
/// of `query_cap` (default 4 * 2^n). spec.value_width is a floor; the
/// comparison width grows to qubo_value_width when needed.
QuboResult qubo_minimize(const DictionarySpec& spec, const Polynomial& poly, int control_width,
                         std::uint64_t seed, std::optional<std::uint64_t> query_cap = std::nullopt);

/// x_i x_{i+1} summed over neighbors.
Polynomial fibonacci_polynomial(int key_width);

/// Value width used by fibonacci_count: smallest m >= 2 with n-1 < 2^{m-1}.
int fibonacci_value_width(int key_width);

/// Counts n-bit strings without two adjacent ones (Fibonacci(n + 2)) as the
/// zero count of fibonacci_polynomial.
CountingResult fibonacci_count(int key_width, int control_width);

struct DictionaryDocument {
    DictionarySpec spec;
    EncodingSource source;
};

/// {"key_width", "value_width", "source": {"type": "table", "values": [...]}
///  | {"type": "partial", "entries": [[k, v], ...]}
///  | {"type": "polynomial", "constant", "linear", "quadratic": [[i, j, q]],
///     "order": "msb" | "lsb"}}. Throws std::invalid_argument naming the
/// offending field.
DictionaryDocument dictionary_from_json(std::string_view text);

/// Polynomial object alone: {"constant", "linear", "quadratic", "order"}.
Polynomial polynomial_from_json(std::string_view text);

}  // namespace qpatterns

#endif  // QPATTERNS_QDICT_H
