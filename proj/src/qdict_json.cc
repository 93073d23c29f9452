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

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qpatterns/qdict.h"

namespace qpatterns {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw std::invalid_argument(field + ": " + why);
}

json parse_object(std::string_view text, const std::string& what) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad_field(what, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        bad_field(what, "expected a JSON object");
    }
    return doc;
}

std::int64_t as_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) {
        bad_field(field, "must be an integer");
    }
    return j.get<std::int64_t>();
}

Polynomial polynomial_from(const json& j, const std::string& where) {
    Polynomial poly;
    if (j.contains("constant")) {
        poly.constant = as_int(j["constant"], where + "constant");
    }
    if (j.contains("linear")) {
        if (!j["linear"].is_array()) {
            bad_field(where + "linear", "must be an array of integers");
        }
        for (std::size_t i = 0; i < j["linear"].size(); ++i) {
            poly.linear.push_back(
                as_int(j["linear"][i], where + "linear[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("quadratic")) {
        if (!j["quadratic"].is_array()) {
            bad_field(where + "quadratic", "must be an array of [i, j, q] triples");
        }
        for (std::size_t k = 0; k < j["quadratic"].size(); ++k) {
            const std::string f = where + "quadratic[" + std::to_string(k) + "]";
            const json& t = j["quadratic"][k];
            if (!t.is_array() || t.size() != 3) {
                bad_field(f, "expected [i, j, q]");
            }
            QuadraticTerm term;
            term.i = static_cast<int>(as_int(t[0], f + "[0]"));
            term.j = static_cast<int>(as_int(t[1], f + "[1]"));
            term.coefficient = as_int(t[2], f + "[2]");
            if (term.i < 0 || term.j < 0 || term.i == term.j || term.i >= kMaxQubits ||
                term.j >= kMaxQubits) {
                bad_field(f, "needs two distinct variable indices in range");
            }
            poly.quadratic.push_back(term);
        }
    }
    if (j.contains("order")) {
        const json& o = j["order"];
        if (o == "msb") {
            poly.order = VariableOrder::MsbFirst;
        } else if (o == "lsb") {
            poly.order = VariableOrder::LsbFirst;
        } else {
            bad_field(where + "order", "must be \"msb\" or \"lsb\"");
        }
    }
    return poly;
}

}  // namespace

Polynomial polynomial_from_json(std::string_view text) {
    return polynomial_from(parse_object(text, "poly"), "poly.");
}

DictionaryDocument dictionary_from_json(std::string_view text) {
    const json doc = parse_object(text, "dictionary");
    DictionaryDocument out;
    for (const char* key : {"key_width", "value_width"}) {
        if (!doc.contains(key)) {
            bad_field(key, "missing");
        }
    }
    out.spec.key_width = static_cast<int>(as_int(doc["key_width"], "key_width"));
    out.spec.value_width = static_cast<int>(as_int(doc["value_width"], "value_width"));
    try {
        out.spec.validate();
    } catch (const std::invalid_argument& e) {
        bad_field("key_width/value_width", e.what());
    }
    if (!doc.contains("source") || !doc["source"].is_object()) {
        bad_field("source", "missing or not an object");
    }
    const json& src = doc["source"];
    if (!src.contains("type") || !src["type"].is_string()) {
        bad_field("source.type", "missing");
    }
    const std::string type = src["type"].get<std::string>();
    if (type == "table") {
        if (!src.contains("values") || !src["values"].is_array()) {
            bad_field("source.values", "must be an array of integers");
        }
        CompleteTable t;
        for (std::size_t i = 0; i < src["values"].size(); ++i) {
            t.values.push_back(as_int(src["values"][i], "source.values[" + std::to_string(i) + "]"));
        }
        out.source = std::move(t);
    } else if (type == "partial") {
        if (!src.contains("entries") || !src["entries"].is_array()) {
            bad_field("source.entries", "must be an array of [key, value] pairs");
        }
        PartialTable t;
        for (std::size_t i = 0; i < src["entries"].size(); ++i) {
            const std::string f = "source.entries[" + std::to_string(i) + "]";
            const json& e = src["entries"][i];
            if (!e.is_array() || e.size() != 2) {
                bad_field(f, "expected [key, value]");
            }
            const std::int64_t k = as_int(e[0], f + "[0]");
            if (k < 0) {
                bad_field(f + "[0]", "key must be nonnegative");
            }
            t.entries.emplace_back(static_cast<std::uint64_t>(k), as_int(e[1], f + "[1]"));
        }
        out.source = std::move(t);
    } else if (type == "polynomial") {
        out.source = polynomial_from(src, "source.");
    } else {
        bad_field("source.type", "unknown source type '" + type + "'");
    }
    return out;
}

}  // namespace qpatterns
