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

#include "gtele/report_io.h"

#include <cstdio>
#include <sstream>

#include "gtele/ket_json.h"

namespace gtele {

std::string format_real(double v) {
    // Avoid printing "-0".
    if (v == 0) {
        v = 0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string bit_label(size_t index, size_t qubits) {
    std::string s(qubits, '0');
    for (size_t k = 0; k < qubits; k++) {
        if ((index >> (qubits - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

void write_amplitudes(std::ostream &out, const std::string &indent, const Ket &k) {
    for (size_t i = 0; i < k.size(); i++) {
        out << indent << bit_label(i, k.qubits()) << "  " << format_real(k[i].real()) << "  "
            << format_real(k[i].imag()) << "\n";
    }
}

}  // namespace

nlohmann::json transcript_to_json(const Transcript &t) {
    nlohmann::json doc;
    doc["n"] = t.channel.n;
    doc["channel_index"] = t.channel.channel_index;
    if (const auto *s = std::get_if<Seeded>(&t.selector)) {
        doc["seed"] = s->seed;
        doc["forced"] = false;
    } else {
        doc["seed"] = nullptr;
        doc["forced"] = true;
    }
    doc["outcome_bits"] = t.outcome.bits();
    doc["outcome_index"] = t.outcome.outcome();
    doc["probability"] = t.probability;
    doc["input"] = ket_to_json(t.input);
    doc["bob_pre"] = ket_to_json(t.bob_pre);
    doc["correction"] = {{"index", t.correction.index()}, {"ops", t.correction.str()}};
    doc["bob_post"] = ket_to_json(t.bob_post);
    doc["fidelity"] = t.fidelity;
    return doc;
}

Transcript transcript_from_json(const nlohmann::json &doc) {
    try {
        ChannelSpec channel{doc.at("n").get<size_t>(), doc.at("channel_index").get<uint64_t>()};
        channel.validate();
        ClassicalMessage message = ClassicalMessage::from_bits(doc.at("outcome_bits").get<std::string>());
        if (message.bit_width() != 2 * channel.n) {
            throw DimensionError("Outcome bit string must be 2N bits wide.");
        }
        OutcomeSelector selector = Forced{message.outcome()};
        if (!doc.at("forced").get<bool>()) {
            selector = Seeded{doc.at("seed").get<uint64_t>()};
        }
        return Transcript{
            ket_from_json(doc.at("input")),
            channel,
            selector,
            message,
            doc.at("probability").get<double>(),
            ket_from_json(doc.at("bob_pre")),
            PauliString(channel.n, doc.at("correction").at("index").get<uint64_t>()),
            ket_from_json(doc.at("bob_post")),
            doc.at("fidelity").get<double>(),
        };
    } catch (const nlohmann::json::exception &e) {
        throw DimensionError(std::string("Malformed transcript: ") + e.what());
    }
}

std::string transcript_to_text(const Transcript &t) {
    std::ostringstream out;
    out << "n: " << t.channel.n << "\n";
    out << "channel_index: " << t.channel.channel_index << "\n";
    if (const auto *s = std::get_if<Seeded>(&t.selector)) {
        out << "selector: seed " << s->seed << "\n";
    } else {
        out << "selector: forced\n";
    }
    out << "outcome_bits: " << t.outcome.bits() << "\n";
    out << "outcome_index: " << t.outcome.outcome() << "\n";
    out << "probability: " << format_real(t.probability) << "\n";
    out << "correction: " << t.correction.str() << " (index " << t.correction.index() << ")\n";
    out << "fidelity: " << format_real(t.fidelity) << "\n";
    out << "input:\n";
    write_amplitudes(out, "  ", t.input);
    out << "bob_pre:\n";
    write_amplitudes(out, "  ", t.bob_pre);
    out << "bob_post:\n";
    write_amplitudes(out, "  ", t.bob_post);
    return out.str();
}

nlohmann::json orbit_report_to_json(const OrbitReport &r) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto &m : r.members) {
        members.push_back({{"j", m.j}, {"included", m.included}, {"concurrence", m.concurrence.value()}});
    }
    return {
        {"source", ket_to_json(r.source)},
        {"members", std::move(members)},
        {"L", r.orthogonal_count},
        {"e_t", r.e_t},
    };
}

std::string orbit_report_to_text(const OrbitReport &r) {
    std::ostringstream out;
    out << "j  included  C\n";
    for (const auto &m : r.members) {
        out << m.j << "  " << (m.included ? "yes" : "no") << "  " << format_real(m.concurrence.value()) << "\n";
    }
    out << "L: " << r.orthogonal_count << "\n";
    out << "E_T: " << format_real(r.e_t) << "\n";
    return out.str();
}

nlohmann::json basis_to_json(const GBasis &basis) {
    nlohmann::json states = nlohmann::json::array();
    for (uint64_t j = 0; j < basis.size(); j++) {
        nlohmann::json rec{{"s_index", j}};
        if (basis.n() == 2) {
            rec["g_label"] = s_to_g_label(j);
        }
        rec["ket"] = ket_to_json(basis[j]);
        states.push_back(std::move(rec));
    }
    return {{"n", basis.n()}, {"states", std::move(states)}};
}

std::string basis_to_text(const GBasis &basis) {
    std::ostringstream out;
    for (uint64_t j = 0; j < basis.size(); j++) {
        out << "s" << j;
        if (basis.n() == 2) {
            out << " = g" << s_to_g_label(j);
        }
        out << "\n";
        const Ket &k = basis[j];
        for (size_t i = 0; i < k.size(); i++) {
            if (k[i] != Amplitude(0)) {
                out << "  " << bit_label(i, k.qubits()) << "  " << format_real(k[i].real()) << "  "
                    << format_real(k[i].imag()) << "\n";
            }
        }
    }
    return out.str();
}

}  // namespace gtele
