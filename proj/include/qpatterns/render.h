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

#ifndef QPATTERNS_RENDER_H
#define QPATTERNS_RENDER_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qpatterns/qdict.h"
#include "qpatterns/state.h"

namespace qpatterns {

enum class OutputFormat { Text, Csv, Json, Svg };

std::optional<OutputFormat> format_from_name(std::string_view name);

using ScalarValue = std::variant<std::int64_t, double, bool, std::string>;

/// A command's result: scalar facts plus an optional histogram.
struct Report {
    std::string title;
    std::vector<std::pair<std::string, ScalarValue>> summary;
    std::optional<OutcomeHistogram> histogram;
    /// When set, histogram labels are key|value pairs of this dictionary
    /// and each row also shows the key, raw value and signed value.
    std::optional<DictionarySpec> dictionary;
};

/// Rows with probability below this (exact) or zero count (sampled) are
/// not printed.
inline constexpr double kPrintFloor = 1e-12;

/// Text: summary lines then one row per outcome with a bar.
/// CSV: label,probability[,count] (dictionary rows add key,value,signed);
///      the summary is omitted.
/// JSON: {"title", "summary", "histogram": {"fields", "entries", "shots",
///      "seed", "prng"}}.
/// SVG: bar chart of probabilities (or counts when sampled).
std::string render_report(const Report& report, OutputFormat format);

/// Largest state the complex histogram draws.
inline constexpr int kMaxComplexHistogramQubits = 10;

/// One row per basis label: magnitude |a| and phase arg(a) in radians.
/// Text draws a magnitude bar and an arrow glyph for the phase; SVG draws
/// an arrow in a unit circle per label; CSV and JSON list the numbers.
/// Throws std::invalid_argument above kMaxComplexHistogramQubits.
std::string render_complex_histogram(const QuantumState& state, OutputFormat format);

}  // namespace qpatterns

#endif  // QPATTERNS_RENDER_H
