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

#include "gtele/teleport.h"

#include <map>
#include <memory>
#include <mutex>

#include "gtele/gbasis.h"
#include "gtele/random.h"

namespace gtele {

namespace {

uint64_t outcome_count(size_t n) {
    return uint64_t{1} << (2 * n);
}

size_t protocol_width(const Ket &joint) {
    if (joint.qubits() % 3 != 0) {
        throw DimensionError(
            "Joint state must hold 3N qubits, got " + std::to_string(joint.qubits()) + ".");
    }
    return joint.qubits() / 3;
}

// Seeds for the correction search. Fixed so tables are reproducible.
constexpr uint64_t kProbeSeed = 0x5eed0f7e1e907ull;
constexpr int kVerificationInputs = 100;

}  // namespace

void ChannelSpec::validate() const {
    if (n == 0 || n > kMaxProtocolWidth) {
        throw CapacityError(
            "N = " + std::to_string(n) + " is outside the supported range [1, " + std::to_string(kMaxProtocolWidth) +
            "].");
    }
    if (channel_index >= outcome_count(n)) {
        throw std::out_of_range(
            "Channel index " + std::to_string(channel_index) + " out of range for N = " + std::to_string(n) + ".");
    }
}

ClassicalMessage::ClassicalMessage(uint64_t outcome, size_t bit_width) : outcome_(outcome), bit_width_(bit_width) {
    if (bit_width == 0 || bit_width % 2 != 0 || bit_width > 2 * PauliString::kMaxWidth) {
        throw std::invalid_argument("Message width must be a positive even number of bits.");
    }
    if (outcome >= (uint64_t{1} << bit_width)) {
        throw std::out_of_range(
            "Outcome " + std::to_string(outcome) + " does not fit in " + std::to_string(bit_width) + " bits.");
    }
}

std::string ClassicalMessage::bits() const {
    std::string out(bit_width_, '0');
    for (size_t k = 0; k < bit_width_; k++) {
        if ((outcome_ >> k) & 1) {
            out[bit_width_ - 1 - k] = '1';
        }
    }
    return out;
}

ClassicalMessage ClassicalMessage::from_bits(std::string_view bits) {
    uint64_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("Message bits must be 0 or 1.");
        }
        value = (value << 1) | uint64_t(c == '1');
    }
    return ClassicalMessage(value, bits.size());
}

CorrectionTable::CorrectionTable(ChannelSpec channel, std::vector<PauliString> entries)
    : channel_(channel), entries_(std::move(entries)) {
    channel_.validate();
    if (entries_.size() != outcome_count(channel_.n)) {
        throw std::invalid_argument("Correction table needs one entry per outcome.");
    }
    for (const auto &e : entries_) {
        if (e.width() != channel_.n) {
            throw std::invalid_argument("Correction width must equal N.");
        }
    }
}

Ket compose(const Ket &input, const ChannelSpec &channel) {
    channel.validate();
    if (input.qubits() != channel.n) {
        throw DimensionError(
            "Input has " + std::to_string(input.qubits()) + " qubits but the channel teleports " +
            std::to_string(channel.n) + ".");
    }
    if (!input.is_normalized()) {
        throw DimensionError("Input state must be normalized.");
    }
    return tensor(input, g_state(channel.channel_index, channel.n));
}

uint64_t sample_outcome(const std::vector<double> &probs, double u) {
    double total = 0;
    std::optional<uint64_t> last_positive;
    for (uint64_t m = 0; m < probs.size(); m++) {
        if (probs[m] <= 0) {
            continue;
        }
        last_positive = m;
        total += probs[m];
        if (u < total) {
            return m;
        }
    }
    if (!last_positive) {
        throw std::invalid_argument("Outcome distribution has no support.");
    }
    // u landed past the accumulated total because of rounding.
    return *last_positive;
}

namespace {

std::vector<double> joint_distribution(const Ket &joint, size_t n) {
    std::vector<double> probs(outcome_count(n));
    for (uint64_t m = 0; m < probs.size(); m++) {
        probs[m] = project_prefix(joint, g_state(m, n)).probability;
    }
    return probs;
}

}  // namespace

Measurement g_measure(const Ket &joint, const OutcomeSelector &selector) {
    const size_t n = protocol_width(joint);
    uint64_t m;
    if (const auto *forced = std::get_if<Forced>(&selector)) {
        if (forced->outcome >= outcome_count(n)) {
            throw std::out_of_range(
                "Forced outcome " + std::to_string(forced->outcome) + " out of range for N = " + std::to_string(n) +
                ".");
        }
        m = forced->outcome;
    } else {
        Rng rng(std::get<Seeded>(selector).seed);
        m = sample_outcome(joint_distribution(joint, n), rng.uniform());
    }
    ProjectionResult r = project_prefix(joint, g_state(m, n));
    return {ClassicalMessage(m, 2 * n), r.probability, std::move(r.residual)};
}

std::vector<double> outcome_distribution(const Ket &input, const ChannelSpec &channel) {
    return joint_distribution(compose(input, channel), channel.n);
}

namespace {

std::vector<PauliString> search_corrections(const ChannelSpec &channel) {
    const size_t n = channel.n;
    const uint64_t count = outcome_count(n);
    Rng probe_rng(kProbeSeed);
    const Ket probe = random_ket(n, probe_rng);
    const Ket joint = compose(probe, channel);

    std::vector<PauliString> entries;
    entries.reserve(count);
    for (uint64_t m = 0; m < count; m++) {
        ProjectionResult r = project_prefix(joint, g_state(m, n));
        if (!r.residual) {
            throw CorrectionSearchError(
                "Outcome " + std::to_string(m) + " has zero probability; channel " +
                std::to_string(channel.channel_index) + " is not a G-state channel.");
        }
        std::optional<PauliString> match;
        for (uint64_t u = 0; u < count; u++) {
            PauliString candidate(n, u);
            if (fidelity(probe, apply_pauli_string(*r.residual, candidate)) >= 1 - kFidelityTolerance) {
                if (match) {
                    throw CorrectionSearchError("Correction for outcome " + std::to_string(m) + " is not unique.");
                }
                match = candidate;
            }
        }
        if (!match) {
            throw CorrectionSearchError("No Pauli string corrects outcome " + std::to_string(m) + ".");
        }
        entries.push_back(*match);
    }

    Rng verify_rng(mix_seed(kProbeSeed));
    for (int t = 0; t < kVerificationInputs; t++) {
        const Ket input = random_ket(n, verify_rng);
        const Ket verify_joint = compose(input, channel);
        for (uint64_t m = 0; m < count; m++) {
            ProjectionResult r = project_prefix(verify_joint, g_state(m, n));
            if (!r.residual ||
                fidelity(input, apply_pauli_string(*r.residual, entries[m])) < 1 - kFidelityTolerance) {
                throw CorrectionSearchError(
                    "Correction for outcome " + std::to_string(m) + " fails on a verification input.");
            }
        }
    }
    return entries;
}

}  // namespace

const CorrectionTable &correction_table(const ChannelSpec &channel) {
    channel.validate();
    static std::mutex mu;
    static std::map<std::pair<size_t, uint64_t>, std::unique_ptr<CorrectionTable>> cache;

    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(channel.n, channel.channel_index);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return *it->second;
    }

    std::vector<PauliString> entries;
    if (channel.channel_index == 0) {
        const uint64_t count = outcome_count(channel.n);
        entries.reserve(count);
        for (uint64_t m = 0; m < count; m++) {
            entries.push_back(pauli_string(m, channel.n));
        }
    } else {
        if (channel.n > kMaxSearchWidth) {
            throw CapacityError(
                "Correction search for non-seed channels supports N <= " + std::to_string(kMaxSearchWidth) + ".");
        }
        entries = search_corrections(channel);
    }
    auto table = std::make_unique<CorrectionTable>(channel, std::move(entries));
    return *cache.emplace(key, std::move(table)).first->second;
}

Transcript run_protocol(const Ket &input, const ChannelSpec &channel, const OutcomeSelector &selector) {
    const Ket joint = compose(input, channel);
    Measurement meas = g_measure(joint, selector);
    if (!meas.bob_pre) {
        throw ZeroProbabilityOutcome(
            "Outcome " + meas.message.bits() + " has probability 0 for this input and channel.");
    }
    const PauliString &correction = correction_table(channel).at(meas.message.outcome());
    Ket bob_post = apply_pauli_string(*meas.bob_pre, correction);
    double f = fidelity(input, bob_post);
    return Transcript{
        input, channel, selector, meas.message, meas.probability, *meas.bob_pre, correction, bob_post, f};
}

}  // namespace gtele
