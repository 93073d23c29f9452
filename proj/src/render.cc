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

#include "qpatterns/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qpatterns {

using nlohmann::ordered_json;

namespace {

constexpr int kBarWidth = 40;

std::string fmt(const char* spec, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::string scalar_text(const ScalarValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                return fmt("%.10g", x);
            } else {
                return std::to_string(x);
            }
        },
        v);
}

ordered_json scalar_json(const ScalarValue& v) {
    return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Row {
    std::uint64_t index;
    double probability;
    std::uint64_t count;
};

std::vector<Row> visible_rows(const OutcomeHistogram& h) {
    std::vector<Row> rows;
    if (h.sampled()) {
        for (const auto& [index, c] : h.counts) {
            if (c > 0) {
                rows.push_back({index, h.probability(index), c});
            }
        }
    } else {
        for (const auto& [index, p] : h.probabilities) {
            if (p > kPrintFloor) {
                rows.push_back({index, p, 0});
            }
        }
    }
    return rows;
}

/// Key, raw value and signed value of a key|value index.
struct DictCells {
    std::uint64_t key;
    std::uint64_t raw;
    std::int64_t value;
};

DictCells dict_cells(const DictionarySpec& spec, std::uint64_t index) {
    const std::uint64_t key = index & ((std::uint64_t{1} << spec.key_width) - 1);
    const SignedValue v = decode_value(index >> spec.key_width, spec);
    return {key, v.raw, v.value};
}

std::string render_text(const Report& r) {
    std::string out;
    if (!r.title.empty()) {
        out += r.title + "\n";
    }
    for (const auto& [name, value] : r.summary) {
        out += name + ": " + scalar_text(value) + "\n";
    }
    if (!r.histogram) {
        return out;
    }
    const OutcomeHistogram& h = *r.histogram;
    if (!r.summary.empty() || !r.title.empty()) {
        out += "\n";
    }
    if (h.sampled()) {
        out += "shots: " + std::to_string(*h.shots) + "  seed: " + std::to_string(*h.seed) +
               "  prng: " + std::string(kSamplerName) + "\n";
    }
    const auto rows = visible_rows(h);
    double peak = 0.0;
    for (const Row& row : rows) {
        peak = std::max(peak, h.sampled() ? static_cast<double>(row.count) : row.probability);
    }
    for (const Row& row : rows) {
        const double height = h.sampled() ? static_cast<double>(row.count) : row.probability;
        const int bar = peak > 0.0 ? static_cast<int>(std::lround(kBarWidth * height / peak)) : 0;
        std::string line = h.label(row.index);
        if (r.dictionary) {
            const DictCells d = dict_cells(*r.dictionary, row.index);
            char buf[96];
            std::snprintf(buf, sizeof buf, "  key=%llu value=%llu (%lld)",
                          static_cast<unsigned long long>(d.key),
                          static_cast<unsigned long long>(d.raw), static_cast<long long>(d.value));
            line += buf;
        }
        line += "  " + fmt("%.6f", row.probability);
        if (h.sampled()) {
            line += "  " + std::to_string(row.count);
        }
        line += "  " + std::string(bar, '#');
        out += line + "\n";
    }
    return out;
}

std::string render_csv(const Report& r) {
    std::string out;
    if (!r.histogram) {
        out += "name,value\n";
        for (const auto& [name, value] : r.summary) {
            out += name + "," + scalar_text(value) + "\n";
        }
        return out;
    }
    const OutcomeHistogram& h = *r.histogram;
    out += "label,probability";
    if (h.sampled()) {
        out += ",count";
    }
    if (r.dictionary) {
        out += ",key,value,signed";
    }
    out += "\n";
    for (const Row& row : visible_rows(h)) {
        out += h.label(row.index) + "," + fmt("%.12f", row.probability);
        if (h.sampled()) {
            out += "," + std::to_string(row.count);
        }
        if (r.dictionary) {
            const DictCells d = dict_cells(*r.dictionary, row.index);
            out += "," + std::to_string(d.key) + "," + std::to_string(d.raw) + "," +
                   std::to_string(d.value);
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const Report& r) {
    ordered_json doc;
    doc["title"] = r.title;
    doc["summary"] = ordered_json::object();
    for (const auto& [name, value] : r.summary) {
        doc["summary"][name] = scalar_json(value);
    }
    if (r.histogram) {
        const OutcomeHistogram& h = *r.histogram;
        ordered_json hist;
        hist["fields"] = ordered_json::array();
        for (const auto& f : h.fields) {
            hist["fields"].push_back({{"name", f.name}, {"width", f.width}});
        }
        hist["entries"] = ordered_json::array();
        for (const Row& row : visible_rows(h)) {
            ordered_json e;
            e["label"] = h.label(row.index);
            e["index"] = row.index;
            e["probability"] = row.probability;
            if (h.sampled()) {
                e["count"] = row.count;
            }
            if (r.dictionary) {
                const DictCells d = dict_cells(*r.dictionary, row.index);
                e["key"] = d.key;
                e["value"] = d.raw;
                e["signed"] = d.value;
            }
            hist["entries"].push_back(std::move(e));
        }
        if (h.sampled()) {
            hist["shots"] = *h.shots;
            hist["seed"] = *h.seed;
            hist["prng"] = std::string(kSamplerName);
        }
        doc["histogram"] = std::move(hist);
    }
    return doc.dump(2) + "\n";
}

std::string render_svg(const Report& r) {
    constexpr int kLeft = 60, kTop = 40, kPlotHeight = 200, kSlot = 28;
    std::vector<Row> rows;
    if (r.histogram) {
        rows = visible_rows(*r.histogram);
    }
    const bool counts = r.histogram && r.histogram->sampled();
    double peak = 0.0;
    for (const Row& row : rows) {
        peak = std::max(peak, counts ? static_cast<double>(row.count) : row.probability);
    }
    const int summary_lines = static_cast<int>(r.summary.size());
    const int width = kLeft + kSlot * std::max<int>(static_cast<int>(rows.size()), 4) + 20;
    const int height = kTop + kPlotHeight + 90 + 16 * summary_lines;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" font-family=\"monospace\" font-size=\"11\">\n";
    out += "<text x=\"10\" y=\"20\" font-size=\"14\">" + xml_escape(r.title) + "</text>\n";
    const int base = kTop + kPlotHeight;
    out += "<line x1=\"" + std::to_string(kLeft) + "\" y1=\"" + std::to_string(base) + "\" x2=\"" +
           std::to_string(width - 10) + "\" y2=\"" + std::to_string(base) + "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        const double v = counts ? static_cast<double>(row.count) : row.probability;
        const double bar = peak > 0.0 ? kPlotHeight * v / peak : 0.0;
        const int x = kLeft + kSlot * static_cast<int>(i) + 4;
        out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + fmt("%.3f", base - bar) +
               "\" width=\"" + std::to_string(kSlot - 8) + "\" height=\"" + fmt("%.3f", bar) +
               "\" fill=\"steelblue\"><title>" + xml_escape(r.histogram->label(row.index)) + " " +
               fmt("%.6f", row.probability) + "</title></rect>\n";
        out += "<text transform=\"translate(" + std::to_string(x + 12) + "," +
               std::to_string(base + 8) + ") rotate(90)\">" +
               xml_escape(r.histogram->label(row.index)) + "</text>\n";
    }
    out += "<text x=\"10\" y=\"" + std::to_string(kTop + 4) + "\">" +
           (counts ? std::to_string(static_cast<std::uint64_t>(peak)) : fmt("%.4f", peak)) +
           "</text>\n";
    int y = base + 80;
    for (const auto& [name, value] : r.summary) {
        out += "<text x=\"10\" y=\"" + std::to_string(y) + "\">" +
               xml_escape(name + ": " + scalar_text(value)) + "</text>\n";
        y += 16;
    }
    out += "</svg>\n";
    return out;
}

/// One of eight arrows for the phase, counterclockwise from east.
std::string_view arrow_glyph(double phase) {
    static constexpr std::string_view kArrows[] = {"→", "↗", "↑", "↖", "←", "↙", "↓", "↘"};
    const double turns = phase / kTwoPi;
    const long sector = std::lround(turns * 8.0);
    return kArrows[((sector % 8) + 8) % 8];
}

}  // namespace

std::optional<OutputFormat> format_from_name(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "svg") return OutputFormat::Svg;
    return std::nullopt;
}

std::string render_report(const Report& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text:
            return render_text(report);
        case OutputFormat::Csv:
            return render_csv(report);
        case OutputFormat::Json:
            return render_json(report);
        case OutputFormat::Svg:
            return render_svg(report);
    }
    throw std::logic_error("unknown output format");
}

std::string render_complex_histogram(const QuantumState& state, OutputFormat format) {
    const int n = state.num_qubits();
    if (n > kMaxComplexHistogramQubits) {
        throw std::invalid_argument("complex histogram is limited to " +
                                    std::to_string(kMaxComplexHistogramQubits) +
                                    " qubits; take a marginal first");
    }
    OutcomeHistogram labels;
    labels.fields.push_back({"q", n});

    // Phases of near-zero amplitudes are noise; print them as 0.
    auto phase_of = [](Complex a) { return std::abs(a) > 1e-12 ? std::arg(a) : 0.0; };
    // Clean -0.0 and -pi from rounding so output stays stable.
    auto tidy = [](double x) {
        if (std::abs(x) < 1e-12) return 0.0;
        if (std::abs(x + kPi) < 1e-12) return kPi;
        return x;
    };

    std::string out;
    switch (format) {
        case OutputFormat::Text:
            for (std::uint64_t i = 0; i < state.size(); ++i) {
                const double mag = std::abs(state[i]);
                const double ph = tidy(phase_of(state[i]));
                const int bar = static_cast<int>(std::lround(kBarWidth * mag));
                out += labels.label(i) + "  " + fmt("%.6f", mag) + "  " + fmt("%+.6f", ph) + "  " +
                       std::string(mag > 1e-12 ? arrow_glyph(ph) : " ") + " " +
                       std::string(bar, '#') + "\n";
            }
            return out;
        case OutputFormat::Csv:
            out = "label,magnitude,phase\n";
            for (std::uint64_t i = 0; i < state.size(); ++i) {
                out += labels.label(i) + "," + fmt("%.12f", std::abs(state[i])) + "," +
                       fmt("%.12f", tidy(phase_of(state[i]))) + "\n";
            }
            return out;
        case OutputFormat::Json: {
            ordered_json doc = ordered_json::array();
            for (std::uint64_t i = 0; i < state.size(); ++i) {
                doc.push_back({{"label", labels.label(i)},
                               {"magnitude", std::abs(state[i])},
                               {"phase", tidy(phase_of(state[i]))}});
            }
            return doc.dump(2) + "\n";
        }
        case OutputFormat::Svg: {
            constexpr int kCell = 70, kRadius = 28;
            const int cols = static_cast<int>(std::min<std::uint64_t>(state.size(), 8));
            const int rows_n = static_cast<int>((state.size() + cols - 1) / cols);
            out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                   std::to_string(cols * kCell) + "\" height=\"" +
                   std::to_string(rows_n * (kCell + 14)) +
                   "\" font-family=\"monospace\" font-size=\"10\">\n";
            for (std::uint64_t i = 0; i < state.size(); ++i) {
                const int cx = static_cast<int>(i % cols) * kCell + kCell / 2;
                const int cy = static_cast<int>(i / cols) * (kCell + 14) + kCell / 2;
                const double mag = std::abs(state[i]);
                const double ph = tidy(phase_of(state[i]));
                const double ex = cx + kRadius * mag * std::cos(ph);
                const double ey = cy - kRadius * mag * std::sin(ph);
                out += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) +
                       "\" r=\"" + std::to_string(kRadius) +
                       "\" fill=\"none\" stroke=\"#bbb\"/>\n";
                out += "<line x1=\"" + std::to_string(cx) + "\" y1=\"" + std::to_string(cy) +
                       "\" x2=\"" + fmt("%.3f", ex) + "\" y2=\"" + fmt("%.3f", ey) +
                       "\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
                out += "<text x=\"" + std::to_string(cx - kRadius) + "\" y=\"" +
                       std::to_string(cy + kRadius + 12) + "\">" + labels.label(i) + " " +
                       fmt("%.3f", mag) + "</text>\n";
            }
            out += "</svg>\n";
            return out;
        }
    }
    throw std::logic_error("unknown output format");
}

}  // namespace qpatterns
