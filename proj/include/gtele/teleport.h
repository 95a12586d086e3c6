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

#ifndef GTELE_TELEPORT_H
#define GTELE_TELEPORT_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gtele/pauli_string.h"
#include "gtele/statevec.h"

namespace gtele {

/// Fidelity threshold a completed run must reach.
constexpr double kFidelityTolerance = 1e-10;

/// Largest N for which correction tables of non-seed channels are searched.
constexpr size_t kMaxSearchWidth = 4;

/// The shared 2N-qubit state |s_c>. Alice holds its first N qubits.
struct ChannelSpec {
    size_t n;
    uint64_t channel_index = 0;

    /// Throws CapacityError / std::out_of_range on a bad N or index.
    void validate() const;
    bool operator==(const ChannelSpec &) const = default;
};

/// Alice's 2N-bit report of the measured s-index.
class ClassicalMessage {
   public:
    ClassicalMessage(uint64_t outcome, size_t bit_width);

    uint64_t outcome() const { return outcome_; }
    size_t bit_width() const { return bit_width_; }

    /// Big-endian: the first character is bit j_{2N}, the last is j_1.
    std::string bits() const;
    static ClassicalMessage from_bits(std::string_view bits);

    bool operator==(const ClassicalMessage &) const = default;

   private:
    uint64_t outcome_;
    size_t bit_width_;
};

/// Sample the measurement outcome from a generator seeded with `seed`.
struct Seeded {
    uint64_t seed;
    bool operator==(const Seeded &) const = default;
};

/// Post-select a specific outcome.
struct Forced {
    uint64_t outcome;
    bool operator==(const Forced &) const = default;
};

using OutcomeSelector = std::variant<Seeded, Forced>;

struct Measurement {
    ClassicalMessage message;
    double probability;
    /// Bob's renormalized N qubits; empty when probability is 0.
    std::optional<Ket> bob_pre;
};

struct ZeroProbabilityOutcome : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorrectionSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Maps each outcome index to the Pauli string Bob applies.
class CorrectionTable {
   public:
    CorrectionTable(ChannelSpec channel, std::vector<PauliString> entries);

    const ChannelSpec &channel() const { return channel_; }
    size_t size() const { return entries_.size(); }
    const PauliString &at(uint64_t outcome) const { return entries_.at(outcome); }
    const std::vector<PauliString> &entries() const { return entries_; }

   private:
    ChannelSpec channel_;
    std::vector<PauliString> entries_;
};

struct Transcript {
    Ket input;
    ChannelSpec channel;
    OutcomeSelector selector;
    ClassicalMessage outcome;
    double probability;
    Ket bob_pre;
    PauliString correction;
    Ket bob_post;
    double fidelity;
};

/// input (x) |s_c>, qubits ordered [input][channel Alice half][channel Bob half].
Ket compose(const Ket &input, const ChannelSpec &channel);

/// Projects the leading 2N qubits of a 3N-qubit joint state onto |s_m>.
/// Forced outcomes of probability 0 come back with probability 0 and no
/// residual.
Measurement g_measure(const Ket &joint, const OutcomeSelector &selector);

/// Exact probability of every outcome, in s-order.
std::vector<double> outcome_distribution(const Ket &input, const ChannelSpec &channel);

/// For c = 0 entry m is U_m. Other channels are solved by exhaustive search
/// over all 4^N Pauli strings against a fixed probe input, then re-verified
/// on 100 random inputs. Results are cached per channel.
const CorrectionTable &correction_table(const ChannelSpec &channel);

/// Runs the whole protocol. Throws ZeroProbabilityOutcome when a forced
/// outcome cannot occur.
Transcript run_protocol(const Ket &input, const ChannelSpec &channel, const OutcomeSelector &selector);

/// Index of the sampled outcome for the distribution `probs` given a uniform
/// variate in [0, 1): first index whose running total exceeds u, skipping
/// zero entries.
uint64_t sample_outcome(const std::vector<double> &probs, double u);

}  // namespace gtele

#endif
