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
#include "qpatterns/circuits.h"

namespace qpatterns {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw std::invalid_argument(field + ": " + why);
}

int int_field(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) {
        bad_field(where + key, "missing");
    }
    if (!j[key].is_number_integer()) {
        bad_field(where + key, "must be an integer");
    }
    return j[key].get<int>();
}

}  // namespace

Circuit circuit_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad_field("circuit", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        bad_field("circuit", "expected a JSON object");
    }
    const int n = int_field(doc, "num_qubits", "");
    if (n < 1 || n > kMaxQubits) {
        bad_field("num_qubits", "must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    Circuit circuit(n);
    if (!doc.contains("ops")) {
        return circuit;
    }
    if (!doc["ops"].is_array()) {
        bad_field("ops", "must be an array");
    }
    std::size_t idx = 0;
    for (const auto& jop : doc["ops"]) {
        const std::string where = "ops[" + std::to_string(idx++) + "].";
        if (!jop.is_object()) {
            bad_field(where.substr(0, where.size() - 1), "must be an object");
        }
        if (!jop.contains("kind") || !jop["kind"].is_string()) {
            bad_field(where + "kind", "missing gate name");
        }
        const auto kind = gate_from_name(jop["kind"].get<std::string>());
        if (!kind) {
            bad_field(where + "kind", "unknown gate '" + jop["kind"].get<std::string>() + "'");
        }
        GateApplication op;
        op.kind = *kind;
        if (gate_has_angle(op.kind)) {
            if (!jop.contains("angle") || !jop["angle"].is_number()) {
                bad_field(where + "angle", "rotation gates need a numeric angle");
            }
            op.angle = jop["angle"].get<double>();
        }
        if (jop.contains("targets")) {
            const auto& t = jop["targets"];
            const std::size_t want = op.kind == GateKind::Swap ? 2 : 1;
            if (!t.is_array() || t.size() != want) {
                bad_field(where + "targets", "expected " + std::to_string(want) + " qubit(s)");
            }
            for (const auto& q : t) {
                if (!q.is_number_integer()) {
                    bad_field(where + "targets", "qubits must be integers");
                }
            }
            op.target = t[0].get<int>();
            if (want == 2) {
                op.target2 = t[1].get<int>();
            }
        } else {
            if (op.kind == GateKind::Swap) {
                bad_field(where + "targets", "SWAP needs \"targets\": [a, b]");
            }
            op.target = int_field(jop, "target", where);
        }
        if (jop.contains("controls")) {
            if (!jop["controls"].is_array()) {
                bad_field(where + "controls", "must be an array");
            }
            for (const auto& c : jop["controls"]) {
                if (!c.is_number_integer()) {
                    bad_field(where + "controls", "qubits must be integers");
                }
                op.controls.push_back(c.get<int>());
            }
        }
        try {
            circuit.append(std::move(op));
        } catch (const std::invalid_argument& e) {
            bad_field(where.substr(0, where.size() - 1), e.what());
        }
    }
    return circuit;
}

std::string circuit_to_json(const Circuit& circuit) {
    json doc;
    doc["num_qubits"] = circuit.num_qubits();
    doc["ops"] = json::array();
    for (const auto& op : circuit.ops()) {
        json j;
        j["kind"] = std::string(gate_name(op.kind));
        if (gate_has_angle(op.kind)) {
            j["angle"] = op.angle;
        }
        if (op.kind == GateKind::Swap) {
            j["targets"] = {op.target, op.target2};
        } else {
            j["target"] = op.target;
        }
        j["controls"] = op.controls;
        doc["ops"].push_back(std::move(j));
    }
    return doc.dump();
}

}  // namespace qpatterns
