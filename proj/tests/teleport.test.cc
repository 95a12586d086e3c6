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

#include <cmath>

#include "gtest/gtest.h"

#include "gtele/acceptance.h"
#include "gtele/gbasis.h"
#include "gtele/random.h"
#include "gtele/reference_tables.h"
#include "test_util.h"

using namespace gtele;
using gtele::testing::max_abs_diff;

namespace {

uint64_t outcome_index_of(const Ket &bell_state) {
    GBasis b = g_basis(1);
    for (uint64_t m = 0; m < b.size(); m++) {
        if (equal_up_to_phase(b[m], bell_state)) {
            return m;
        }
    }
    throw std::logic_error("not a Bell state");
}

}  // namespace

TEST(teleport, compose) {
    Ket joint = compose(Ket::basis("0"), {1, 0});
    const double r = 1 / std::sqrt(2.0);
    ASSERT_LE(max_abs_diff(joint, (Ket::basis("000") + Ket::basis("011")).scaled(r)), 1e-15);

    Rng rng(1);
    Ket phi = random_ket(2, rng);
    ASSERT_EQ(compose(phi, {2, 0}), tensor(phi, tabulated_g_state(1)));

    ASSERT_THROW(compose(Ket::basis("00"), {1, 0}), DimensionError);
    ASSERT_THROW(compose(Ket(1, {1, 1}), {1, 0}), DimensionError);
    ASSERT_THROW(compose(Ket::basis("0"), {1, 4}), std::out_of_range);
    ASSERT_THROW(compose(Ket::basis("0"), {0, 0}), CapacityError);
    ASSERT_THROW(compose(Ket::basis(7, 0), {7, 0}), CapacityError);
}

TEST(teleport, every_outcome_is_equally_likely) {
    Rng rng(2);
    for (size_t n = 1; n <= 3; n++) {
        for (int t = 0; t < 5; t++) {
            Ket phi = random_ket(n, rng);
            uint64_t c = rng.next() % (uint64_t{1} << (2 * n));
            auto probs = outcome_distribution(phi, {n, c});
            ASSERT_EQ(probs.size(), size_t{1} << (2 * n));
            for (double p : probs) {
                ASSERT_NEAR(p, 1.0 / probs.size(), 1e-12);
            }
        }
    }
}

TEST(teleport, g_measure_forced) {
    Ket phi = Ket(2, {0.5, Amplitude(0, 0.5), -0.5, 0.5});
    Measurement meas = g_measure(compose(phi, {2, 0}), Forced{0});
    ASSERT_EQ(meas.message.bits(), "0000");
    ASSERT_NEAR(meas.probability, 1.0 / 16, 1e-15);
    ASSERT_LE(max_abs_diff(*meas.bob_pre, phi), 1e-14);

    ASSERT_THROW(g_measure(compose(phi, {2, 0}), Forced{16}), std::out_of_range);
    ASSERT_THROW(g_measure(Ket::basis("0000"), Forced{0}), DimensionError);
}

TEST(teleport, zero_probability_forced_outcome) {
    // |0> next to |00>: projecting onto Psi+ on the first two qubits is impossible.
    Ket joint = tensor(Ket::basis("0"), Ket::basis("00"));
    Measurement meas = g_measure(joint, Forced{2});
    ASSERT_EQ(meas.probability, 0);
    ASSERT_FALSE(meas.bob_pre.has_value());
    ASSERT_EQ(meas.message.bits(), "10");
}

TEST(teleport, seeded_measurement_follows_inverse_cdf) {
    Rng rng(3);
    Ket phi = random_ket(2, rng);
    for (uint64_t seed = 0; seed < 20; seed++) {
        Rng draw(seed);
        uint64_t expected = sample_outcome(outcome_distribution(phi, {2, 0}), draw.uniform());
        ASSERT_EQ(g_measure(compose(phi, {2, 0}), Seeded{seed}).message.outcome(), expected);
    }
}

TEST(teleport, seed_channel_corrections_are_the_generators) {
    for (size_t n = 1; n <= 3; n++) {
        const CorrectionTable &t = correction_table({n, 0});
        ASSERT_EQ(t.size(), size_t{1} << (2 * n));
        for (uint64_t m = 0; m < t.size(); m++) {
            ASSERT_EQ(t.at(m), pauli_string(m, n));
        }
    }
    ASSERT_EQ(correction_table({2, 0}).at(5).str(), "Z.Z");
}

TEST(teleport, correction_table_is_cached) {
    ASSERT_EQ(&correction_table({2, 7}), &correction_table({2, 7}));
    ASSERT_THROW(correction_table({2, 16}), std::out_of_range);
    ASSERT_THROW(correction_table({5, 1}), CapacityError);
}

TEST(teleport, two_qubit_outcome_table) {
    Rng rng(4);
    const CorrectionTable &table = correction_table({2, 0});
    for (const auto &row : reference::two_qubit_table()) {
        uint64_t m = g_label_to_s(row.g_label);
        ASSERT_TRUE(checks::same_operator_up_to_phase(2, table.at(m), row.correction)) << row.g_label;
        for (int t = 0; t < 10; t++) {
            Ket phi = random_ket(2, rng);
            Measurement meas = g_measure(compose(phi, {2, 0}), Forced{m});
            ASSERT_NEAR(meas.probability, 1.0 / 16, 1e-12);
            ASSERT_TRUE(equal_up_to_phase(*meas.bob_pre, reference::apply_product(phi, row.bob_operator)));
            Ket fixed = reference::apply_product(*meas.bob_pre, row.correction);
            ASSERT_GE(fidelity(phi, fixed), 1 - kFidelityTolerance);
        }
    }
}

TEST(teleport, one_qubit_outcome_table) {
    Rng rng(5);
    const Ket channel = reference::one_qubit_table()[0].alice_state;
    const uint64_t c = outcome_index_of(channel);
    ASSERT_EQ(c, 3);
    for (const auto &row : reference::one_qubit_table()) {
        uint64_t m = outcome_index_of(row.alice_state);
        ASSERT_TRUE(checks::same_operator_up_to_phase(1, correction_table({1, c}).at(m), row.correction))
            << row.alice_result;
        for (int t = 0; t < 10; t++) {
            Ket phi = random_ket(1, rng);
            Measurement meas = g_measure(compose(phi, {1, c}), Forced{m});
            const auto &M = row.bob_map;
            Ket expected(1, {M[0][0] * phi[0] + M[0][1] * phi[1], M[1][0] * phi[0] + M[1][1] * phi[1]});
            ASSERT_TRUE(equal_up_to_phase(*meas.bob_pre, expected)) << row.alice_result;
        }
    }
}

TEST(teleport, run_protocol_transcript) {
    Rng rng(6);
    Ket phi = random_ket(2, rng);
    Transcript tr = run_protocol(phi, {2, 0}, Forced{9});
    ASSERT_EQ(tr.outcome.outcome(), 9);
    ASSERT_EQ(tr.outcome.bits(), "1001");
    ASSERT_EQ(tr.correction, pauli_string(9, 2));
    ASSERT_EQ(tr.bob_post, apply_pauli_string(tr.bob_pre, tr.correction));
    ASSERT_GE(tr.fidelity, 1 - kFidelityTolerance);
    ASSERT_EQ(tr.input, phi);
}

TEST(teleport, transcripts_are_deterministic) {
    Rng rng(7);
    Ket phi = random_ket(3, rng);
    for (uint64_t seed : {0ull, 1ull, 99ull}) {
        Transcript a = run_protocol(phi, {3, 5}, Seeded{seed});
        Transcript b = run_protocol(phi, {3, 5}, Seeded{seed});
        ASSERT_EQ(a.outcome, b.outcome);
        ASSERT_EQ(a.bob_pre, b.bob_pre);
        ASSERT_EQ(a.bob_post, b.bob_post);
        ASSERT_EQ(a.fidelity, b.fidelity);
    }
}

TEST(teleport_properties, faithful_for_every_outcome) {
    Rng rng(8);
    for (size_t n = 1; n <= 3; n++) {
        const uint64_t count = uint64_t{1} << (2 * n);
        for (int t = 0; t < 200; t++) {
            Ket phi = random_ket(n, rng);
            uint64_t m = rng.next() % count;
            Transcript tr = run_protocol(phi, {n, 0}, Forced{m});
            ASSERT_GE(tr.fidelity, 1 - kFidelityTolerance) << "n=" << n << " m=" << m;
            ASSERT_LE(tr.correction.gate_count(), 2 * n);
            Transcript sampled = run_protocol(phi, {n, 0}, Seeded{uint64_t(t)});
            ASSERT_GE(sampled.fidelity, 1 - kFidelityTolerance);
        }
    }
}

TEST(teleport_properties, every_channel_corrects_with_outcome_xor_channel) {
    for (size_t n = 1; n <= 2; n++) {
        const uint64_t count = uint64_t{1} << (2 * n);
        for (uint64_t c = 0; c < count; c++) {
            const CorrectionTable &t = correction_table({n, c});
            for (uint64_t m = 0; m < count; m++) {
                ASSERT_EQ(t.at(m), pauli_string(m ^ c, n)) << "n=" << n << " c=" << c << " m=" << m;
            }
        }
    }
    for (uint64_t c : {1, 22, 63}) {
        const CorrectionTable &t = correction_table({3, c});
        for (uint64_t m = 0; m < 64; m++) {
            ASSERT_EQ(t.at(m), pauli_string(m ^ c, 3));
        }
    }
}

TEST(teleport_properties, other_channels_are_faithful) {
    Rng rng(9);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 3;
        uint64_t c = rng.next() % (uint64_t{1} << (2 * n));
        Ket phi = random_ket(n, rng);
        Transcript tr = run_protocol(phi, {n, c}, Seeded{rng.next()});
        ASSERT_GE(tr.fidelity, 1 - kFidelityTolerance);
    }
}

TEST(classical_message, bits_are_big_endian) {
    ClassicalMessage msg(1, 4);
    ASSERT_EQ(msg.bits(), "0001");
    ASSERT_EQ(ClassicalMessage(8, 4).bits(), "1000");
    ASSERT_EQ(ClassicalMessage(5, 6).bits(), "000101");
    ASSERT_EQ(ClassicalMessage::from_bits("1001"), ClassicalMessage(9, 4));
    for (uint64_t m = 0; m < 64; m++) {
        ClassicalMessage x(m, 6);
        ASSERT_EQ(ClassicalMessage::from_bits(x.bits()), x);
        ASSERT_EQ(x.bits().size(), 6);
    }
    ASSERT_THROW(ClassicalMessage(16, 4), std::out_of_range);
    ASSERT_THROW(ClassicalMessage(0, 3), std::invalid_argument);
    ASSERT_THROW(ClassicalMessage::from_bits("10a1"), std::invalid_argument);
}

TEST(sample_outcome, inverse_cdf) {
    ASSERT_EQ(sample_outcome({0.5, 0.5}, 0.0), 0);
    ASSERT_EQ(sample_outcome({0.5, 0.5}, 0.4999), 0);
    ASSERT_EQ(sample_outcome({0.5, 0.5}, 0.5), 1);
    ASSERT_EQ(sample_outcome({0, 1, 0}, 0.0), 1);
    ASSERT_EQ(sample_outcome({0.3, 0.3, 0.3, 0}, 0.95), 2);
    ASSERT_THROW(sample_outcome({0, 0}, 0.1), std::invalid_argument);
}
