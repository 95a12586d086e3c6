// Copyright 2026 The gtele Authors
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

#include "gtele/ket_json.h"

#include <cmath>

namespace gtele {

nlohmann::json ket_to_json(const Ket &k) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &a : k.amps()) {
        amps.push_back({a.real(), a.imag()});
    }
    return {{"qubits", k.qubits()}, {"amplitudes", std::move(amps)}};
}

Ket ket_from_json(const nlohmann::json &doc) {
    if (!doc.is_object() || !doc.contains("qubits") || !doc.contains("amplitudes")) {
        throw DimensionError("Ket document needs 'qubits' and 'amplitudes' fields.");
    }
    const auto &q = doc.at("qubits");
    if (!q.is_number_unsigned() && !(q.is_number_integer() && q.get<int64_t>() > 0)) {
        throw DimensionError("'qubits' must be a positive integer.");
    }
    size_t qubits = q.get<size_t>();
    if (qubits == 0 || qubits > kMaxQubits) {
        throw CapacityError("'qubits' must lie in [1, " + std::to_string(kMaxQubits) + "].");
    }
    const auto &list = doc.at("amplitudes");
    if (!list.is_array()) {
        throw DimensionError("'amplitudes' must be an array.");
    }
    if (list.size() != (size_t{1} << qubits)) {
        throw DimensionError(
            "Expected " + std::to_string(size_t{1} << qubits) + " amplitudes, got " + std::to_string(list.size()) +
            ".");
    }
    std::vector<Amplitude> amps;
    amps.reserve(list.size());
    for (const auto &pair : list) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw DimensionError("Each amplitude must be a [re, im] pair of numbers.");
        }
        double re = pair[0].get<double>();
        double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw DimensionError("Amplitudes must be finite.");
        }
        amps.emplace_back(re, im);
    }
    return Ket(qubits, std::move(amps));
}

Ket parse_ket(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw DimensionError(std::string("Malformed ket document: ") + e.what());
    }
    return ket_from_json(doc);
}

}  // namespace gtele
