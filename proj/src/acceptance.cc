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

#include "gtele/acceptance.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "gtele/entanglement.h"
#include "gtele/gbasis.h"
#include "gtele/random.h"
#include "gtele/report_io.h"
#include "gtele/teleport.h"

namespace gtele::checks {

namespace {

using reference::OperatorProduct;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// Runs `body`, converting any exception into a failed check.
CheckResult run_check(std::string id, std::string description, const std::function<bool(std::string &)> &body) {
    std::string detail;
    bool passed = false;
    try {
        passed = body(detail);
    } catch (const std::exception &e) {
        detail = std::string("exception: ") + e.what();
    }
    return {std::move(id), std::move(description), passed, std::move(detail)};
}

double max_abs_diff(const Ket &a, const Ket &b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

Ket one_qubit(Amplitude a, Amplitude b) {
    return Ket(1, {a, b});
}

/// Fixed generic input with distinct complex amplitudes.
Ket probe_input(size_t n, uint64_t seed) {
    Rng rng(seed);
    return random_ket(n, rng);
}

size_t g_state_index_matching(const Ket &target, size_t n) {
    for (uint64_t m = 0; m < (uint64_t{1} << (2 * n)); m++) {
        if (equal_up_to_phase(g_state(m, n), target)) {
            return m;
        }
    }
    throw std::logic_error("No G-state matches the target.");
}

/// Single-qubit factorization audit: applying the string qubit by qubit with
/// apply_pauli reproduces apply_pauli_string.
bool factorizes(const PauliString &ps) {
    OperatorProduct ops;
    for (size_t k = 1; k <= ps.width(); k++) {
        if (ps.z(k)) {
            ops.push_back({PauliAxis::Z, k});
        }
        if (ps.x(k)) {
            ops.push_back({PauliAxis::X, k});
        }
    }
    return ops.size() == ps.gate_count() && ops.size() <= 2 * ps.width() &&
           same_operator_up_to_phase(ps.width(), ps, ops);
}

}  // namespace

bool same_operator_up_to_phase(size_t qubits, const PauliString &ps, const OperatorProduct &ops, double tol) {
    if (ps.width() != qubits) {
        return false;
    }
    std::optional<Amplitude> phase;
    for (uint64_t b = 0; b < (uint64_t{1} << qubits); b++) {
        Ket basis = Ket::basis(qubits, b);
        Ket lhs = apply_pauli_string(basis, ps);
        Ket rhs = reference::apply_product(basis, ops);
        if (!phase) {
            phase = inner(rhs, lhs);
            if (std::abs(std::abs(*phase) - 1) > tol) {
                return false;
            }
        }
        if (max_abs_diff(lhs, rhs.scaled(*phase)) > tol) {
            return false;
        }
    }
    return true;
}

std::vector<CheckResult> acceptance_criteria() {
    std::vector<CheckResult> out;

    out.push_back(run_check("1", "G-basis orthonormality (N=1..3) and exact match with g_1..g_16", [](std::string &detail) {
        double worst = 0;
        for (size_t n = 1; n <= 3; n++) {
            GBasis basis = g_basis(n);
            for (size_t j = 0; j < basis.size(); j++) {
                for (size_t k = 0; k < basis.size(); k++) {
                    double expected = j == k ? 1 : 0;
                    worst = std::max(worst, std::abs(inner(basis[j], basis[k]) - expected));
                }
            }
        }
        bool ok = worst <= 1e-12;
        std::vector<int> seen;
        for (uint64_t j = 0; j < 16; j++) {
            int label = s_to_g_label(j);
            ok = ok && g_state(j, 2) == tabulated_g_state(label);
            seen.push_back(label);
        }
        std::sort(seen.begin(), seen.end());
        for (int i = 0; i < 16; i++) {
            ok = ok && seen[i] == i + 1;
        }
        ok = ok && s_to_g_label(0) == 1 && s_to_g_label(1) == 2 && s_to_g_label(2) == 9 && s_to_g_label(3) == 10;
        detail = "max |<s_j|s_k> - delta| = " + sci(worst);
        return ok;
    }));

    out.push_back(run_check("2", "protocol faithfulness over every forced outcome", [](std::string &detail) {
        struct Sweep {
            size_t n;
            int inputs;
        };
        double worst = 0;
        size_t runs = 0;
        Rng rng(2001);
        for (Sweep s : {Sweep{1, 200}, Sweep{2, 200}, Sweep{3, 20}}) {
            ChannelSpec channel{s.n, 0};
            for (int t = 0; t < s.inputs; t++) {
                Ket input = random_ket(s.n, rng);
                for (uint64_t m = 0; m < (uint64_t{1} << (2 * s.n)); m++) {
                    Transcript tr = run_protocol(input, channel, Forced{m});
                    worst = std::max(worst, 1 - tr.fidelity);
                    runs++;
                }
            }
        }
        detail = std::to_string(runs) + " runs, max 1-F = " + sci(worst);
        return worst <= kFidelityTolerance;
    }));

    out.push_back(run_check("3", "two-qubit outcome table: residual states and corrections", [](std::string &detail) {
        const ChannelSpec channel{2, 0};
        bool ok = true;
        int rows = 0;
        for (uint64_t seed : {31ull, 32ull, 33ull}) {
            const Ket phi = probe_input(2, seed);
            const Ket joint = compose(phi, channel);
            for (const auto &row : reference::two_qubit_table()) {
                const uint64_t m = g_label_to_s(row.g_label);
                Measurement meas = g_measure(joint, Forced{m});
                ok = ok && meas.bob_pre && std::abs(meas.probability - 1.0 / 16) <= 1e-10 &&
                     equal_up_to_phase(*meas.bob_pre, reference::apply_product(phi, row.bob_operator));
                ok = ok && same_operator_up_to_phase(2, correction_table(channel).at(m), row.correction);
                rows++;
            }
        }
        detail = std::to_string(rows) + " rows checked";
        return ok;
    }));

    out.push_back(run_check("4", "one-qubit outcome table over the |Psi-> channel", [](std::string &detail) {
        const ChannelSpec channel{1, 3};
        bool ok = equal_up_to_phase(g_state(3, 1), reference::one_qubit_table()[0].alice_state);
        int rows = 0;
        for (uint64_t seed : {41ull, 42ull, 43ull}) {
            const Ket phi = probe_input(1, seed);
            const Ket joint = compose(phi, channel);
            for (const auto &row : reference::one_qubit_table()) {
                const uint64_t m = g_state_index_matching(row.alice_state, 1);
                Measurement meas = g_measure(joint, Forced{m});
                const Amplitude a = phi[0];
                const Amplitude b = phi[1];
                Ket expected = one_qubit(
                    row.bob_map[0][0] * a + row.bob_map[0][1] * b, row.bob_map[1][0] * a + row.bob_map[1][1] * b);
                ok = ok && meas.bob_pre && equal_up_to_phase(*meas.bob_pre, expected);
                ok = ok && std::abs(meas.probability - 0.25) <= 1e-10;
                ok = ok && equal_up_to_phase(reference::apply_product(*meas.bob_pre, row.correction), phi);
                ok = ok && same_operator_up_to_phase(1, correction_table(channel).at(m), row.correction);
                rows++;
            }
        }
        detail = std::to_string(rows) + " rows checked";
        return ok;
    }));

    out.push_back(run_check("5", "uniform outcome probabilities 2^-2N for G-state channels", [](std::string &detail) {
        double worst = 0;
        Rng rng(5005);
        for (size_t n = 1; n <= 3; n++) {
            const uint64_t channels = n <= 2 ? (uint64_t{1} << (2 * n)) : 1;
            for (uint64_t c = 0; c < channels; c++) {
                for (int t = 0; t < 5; t++) {
                    Ket input = random_ket(n, rng);
                    auto probs = outcome_distribution(input, ChannelSpec{n, c});
                    const double expected = std::ldexp(1.0, -int(2 * n));
                    for (double p : probs) {
                        worst = std::max(worst, std::abs(p - expected));
                    }
                }
            }
        }
        detail = "max |p - 2^-2N| = " + sci(worst);
        return worst <= 1e-10;
    }));

    out.push_back(run_check("6", "E_T of G-states, GHZ+ and W", [](std::string &detail) {
        bool ok = true;
        double worst = 0;
        for (int label = 1; label <= 16; label++) {
            OrbitReport r = entanglement_of_teleportation(tabulated_g_state(label));
            worst = std::max(worst, std::abs(r.e_t - 1));
            ok = ok && r.orthogonal_count == 16;
        }
        OrbitReport ghz = entanglement_of_teleportation(named_state("ghz+", 2));
        worst = std::max(worst, std::abs(ghz.e_t - 0.5));
        ok = ok && ghz.orthogonal_count == 8;
        std::vector<Ket> expected;
        for (const char *name : {"ghz+", "ghz-", "g+", "g-", "h+", "h-", "z+", "z-"}) {
            expected.push_back(named_state(name, 2));
        }
        std::vector<bool> covered(expected.size(), false);
        for (const auto &m : ghz.members) {
            if (!m.included) {
                continue;
            }
            bool matched = false;
            for (size_t i = 0; i < expected.size(); i++) {
                if (equal_up_to_phase(m.state, expected[i])) {
                    matched = true;
                    covered[i] = true;
                }
            }
            ok = ok && matched;
        }
        ok = ok && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
        OrbitReport w = entanglement_of_teleportation(named_state("w", 2));
        worst = std::max(worst, std::abs(w.e_t));
        ok = ok && w.orthogonal_count == 8;
        detail = "L(GHZ+) = " + std::to_string(ghz.orthogonal_count) + ", L(W) = " +
                 std::to_string(w.orthogonal_count) + ", max error = " + sci(worst);
        return ok && worst <= 1e-10;
    }));

    out.push_back(run_check("7", "concurrence range, separability, magic states, formula agreement", [](std::string &detail) {
        Rng rng(7007);
        double max_c = 0;
        double min_c = 1;
        for (int t = 0; t < 10000; t++) {
            size_t qubits = 2 * (1 + t % 3);
            double c = concurrence(random_ket(qubits, rng)).value();
            max_c = std::max(max_c, c);
            min_c = std::min(min_c, c);
        }
        double max_product = 0;
        for (int t = 0; t < 1000; t++) {
            size_t qubits = 2 * (1 + t % 3);
            max_product = std::max(max_product, concurrence(random_product_ket(qubits, rng)).value());
        }
        const auto &magic = magic_basis();
        double magic_err = 0;
        for (const auto &e : magic.e) {
            magic_err = std::max(magic_err, std::abs(concurrence(e).value() - 1));
        }
        for (int t = 0; t < 100; t++) {
            std::vector<Amplitude> amps(16);
            for (const auto &e : magic.e) {
                double w = rng.normal();
                for (size_t i = 0; i < 16; i++) {
                    amps[i] += w * e[i];
                }
            }
            Ket k = Ket(4, std::move(amps)).normalized();
            magic_err = std::max(magic_err, std::abs(concurrence(k).value() - 1));
        }
        double agreement = 0;
        for (int t = 0; t < 1000; t++) {
            Ket k = random_ket(4, rng);
            double c = concurrence(k).value();
            agreement = std::max(agreement, std::abs(c - concurrence_f(k).value()));
            agreement = std::max(agreement, std::abs(c - concurrence_magic(k).value()));
        }
        detail = "C in [" + sci(min_c) + ", " + sci(max_c) + "], product max " + sci(max_product) +
                 ", magic err " + sci(magic_err) + ", formula gap " + sci(agreement);
        return min_c >= 0 && max_c <= 1 + 1e-10 && max_product <= 1e-10 && magic_err <= 1e-12 &&
               agreement <= 1e-10;
    }));

    out.push_back(run_check("8", "every correction is a product of single-qubit Paulis", [](std::string &detail) {
        size_t audited = 0;
        bool ok = true;
        Rng rng(8008);
        for (size_t n = 1; n <= 3; n++) {
            const uint64_t channels = n <= 2 ? (uint64_t{1} << (2 * n)) : 1;
            for (uint64_t c = 0; c < channels; c++) {
                ChannelSpec channel{n, c};
                Ket input = random_ket(n, rng);
                for (uint64_t m = 0; m < (uint64_t{1} << (2 * n)); m++) {
                    Transcript tr = run_protocol(input, channel, Forced{m});
                    ok = ok && tr.correction.width() == n && factorizes(tr.correction);
                    audited++;
                }
            }
        }
        detail = std::to_string(audited) + " corrections audited";
        return ok;
    }));

    out.push_back(run_check("9", "seeded transcripts are byte-identical across runs", [](std::string &detail) {
        bool ok = true;
        for (size_t n = 1; n <= 3; n++) {
            for (uint64_t seed : {1ull, 7ull, 123456789ull}) {
                Ket input = probe_input(n, mix_seed(seed));
                std::string first = transcript_to_json(run_protocol(input, ChannelSpec{n, 0}, Seeded{seed})).dump();
                std::string second = transcript_to_json(run_protocol(input, ChannelSpec{n, 0}, Seeded{seed})).dump();
                ok = ok && first == second;
            }
        }
        detail = "9 seeded pairs compared";
        return ok;
    }));

    return out;
}

std::vector<CheckResult> worked_examples() {
    std::vector<CheckResult> out;
    const Ket g1 = tabulated_g_state(1);
    const Amplitude a(0.6, 0.1);
    const Amplitude b(0.3, -0.734846922834953);  // |a|^2 + |b|^2 = 1
    const Ket phi1 = one_qubit(a, b).normalized();
    const double r2 = 1 / std::sqrt(2.0);
    const Ket psi_minus = (Ket::basis("01") - Ket::basis("10")).scaled(r2);

    auto add = [&](std::string id, std::string text, std::function<bool(std::string &)> body) {
        out.push_back(run_check(std::move(id), std::move(text), body));
    };

    add("statevec.tensor", "|phi> (x) |Psi-> expands to the three-qubit joint state", [&](std::string &) {
        Ket joint = tensor(phi1, psi_minus);
        Ket expected = (phi1[0] * r2) * (Ket::basis("001") - Ket::basis("010")) +
                       (phi1[1] * r2) * (Ket::basis("101") - Ket::basis("110"));
        return max_abs_diff(joint, expected) <= 1e-15;
    });
    add("statevec.tensor_g1", "|00> (x) g_1 has weight 1/2 on 000000, 000101, 001010, 001111", [&](std::string &) {
        Ket joint = tensor(Ket::basis("00"), g1);
        Ket expected = 0.5 * (Ket::basis("000000") + Ket::basis("000101") + Ket::basis("001010") +
                              Ket::basis("001111"));
        return joint == expected;
    });
    add("statevec.inner", "<g_2|g_9> = 0", [&](std::string &) {
        return inner(tabulated_g_state(2), tabulated_g_state(9)) == Amplitude(0);
    });
    add("statevec.pauli", "Z_1 g_1 = g_2 and X_1 g_1 = g_9", [&](std::string &) {
        return apply_pauli(g1, PauliAxis::Z, 1) == tabulated_g_state(2) &&
               apply_pauli(g1, PauliAxis::X, 1) == tabulated_g_state(9);
    });
    add("statevec.pauli_string", "U_1 g_1 = g_2 and U_3 g_1 = g_10", [&](std::string &) {
        return apply_pauli_string(g1, pauli_string(1, 2)) == tabulated_g_state(2) &&
               apply_pauli_string(g1, pauli_string(3, 2)) == tabulated_g_state(10);
    });
    add("statevec.project", "projecting onto |Psi-> leaves -a|0> - b|1> with probability 1/4", [&](std::string &) {
        ProjectionResult r = project_prefix(tensor(phi1, psi_minus), psi_minus);
        return r.residual && std::abs(r.probability - 0.25) <= 1e-12 &&
               max_abs_diff(*r.residual, phi1.scaled(-1)) <= 1e-12;
    });
    add("gbasis.seed", "seed state at N=2 equals g_1", [&](std::string &) { return seed_state(2) == g1; });
    add("gbasis.pauli_string", "U_1 = Z on qubit 1, U_2 = X on qubit 1", [&](std::string &) {
        PauliString u1 = pauli_string(1, 2);
        PauliString u2 = pauli_string(2, 2);
        return u1.z(1) && !u1.x(1) && !u1.z(2) && !u1.x(2) && !u2.z(1) && u2.x(1) && !u2.z(2) && !u2.x(2);
    });
    add("gbasis.g_state", "s_0 = g_1, s_1 = g_2, s_2 = g_9, s_3 = g_10 exactly", [&](std::string &) {
        return g_state(0, 2) == g1 && g_state(1, 2) == tabulated_g_state(2) &&
               g_state(2, 2) == tabulated_g_state(9) && g_state(3, 2) == tabulated_g_state(10);
    });
    add("gbasis.orthonormal", "<g_j|g_k> = delta_jk over all 256 pairs", [&](std::string &) {
        GBasis basis = g_basis(2);
        for (size_t j = 0; j < 16; j++) {
            for (size_t k = 0; k < 16; k++) {
                if (std::abs(inner(basis[j], basis[k]) - Amplitude(j == k ? 1 : 0)) > 1e-12) {
                    return false;
                }
            }
        }
        return true;
    });
    add("gbasis.magic", "e_1 = g_1, e_2 = i g_2, e_15 = g_16", [&](std::string &) {
        const auto &m = magic_basis();
        return m.e[0] == g1 && m.e[1] == tabulated_g_state(2).scaled({0, 1}) && m.e[14] == tabulated_g_state(16) &&
               m.f[1] == tabulated_g_state(2);
    });
    add("teleport.compose", "|00> with channel s_0 gives the a-term of the joint expansion", [&](std::string &) {
        return compose(Ket::basis("00"), ChannelSpec{2, 0}) == tensor(Ket::basis("00"), g1);
    });
    add("teleport.g6", "outcome g_6 leaves X_2 Z_1 |phi> with probability 1/16", [&](std::string &) {
        Ket phi = probe_input(2, 61);
        Measurement meas = g_measure(compose(phi, ChannelSpec{2, 0}), Forced{g_label_to_s(6)});
        Ket expected = apply_pauli(apply_pauli(phi, PauliAxis::Z, 1), PauliAxis::X, 2);
        return meas.bob_pre && std::abs(meas.probability - 1.0 / 16) <= 1e-12 &&
               equal_up_to_phase(*meas.bob_pre, expected);
    });
    add("teleport.psi_minus", "channel |Psi->, outcome |Psi->: Bob holds -a|0> - b|1>", [&](std::string &) {
        Measurement meas = g_measure(compose(phi1, ChannelSpec{1, 3}), Forced{3});
        return meas.bob_pre && equal_up_to_phase(*meas.bob_pre, phi1) &&
               max_abs_diff(*meas.bob_pre, phi1.scaled(-1)) <= 1e-12;
    });
    add("teleport.uniform", "all 16 outcomes have probability 1/16", [&](std::string &) {
        for (double p : outcome_distribution(probe_input(2, 62), ChannelSpec{2, 0})) {
            if (std::abs(p - 1.0 / 16) > 1e-12) {
                return false;
            }
        }
        return true;
    });
    add("teleport.uniform_n1", "channel |Psi-> at N=1 gives four outcomes of 1/4", [&](std::string &) {
        for (double p : outcome_distribution(phi1, ChannelSpec{1, 3})) {
            if (std::abs(p - 0.25) > 1e-12) {
                return false;
            }
        }
        return true;
    });
    add("teleport.corrections", "g_1 -> I, g_16 -> Z_2 Z_1 X_2 X_1, |Phi+> over |Psi-> -> ZX", [&](std::string &) {
        const auto &t2 = correction_table(ChannelSpec{2, 0});
        const auto &t1 = correction_table(ChannelSpec{1, 3});
        OperatorProduct row16{{PauliAxis::Z, 2}, {PauliAxis::Z, 1}, {PauliAxis::X, 2}, {PauliAxis::X, 1}};
        OperatorProduct zx{{PauliAxis::Z, 1}, {PauliAxis::X, 1}};
        return t2.at(g_label_to_s(1)).is_identity() && same_operator_up_to_phase(2, t2.at(g_label_to_s(16)), row16) &&
               same_operator_up_to_phase(1, t1.at(0), zx);
    });
    add("teleport.faithful", "arbitrary two-qubit input is recovered for all 16 outcomes", [&](std::string &) {
        Ket phi = probe_input(2, 63);
        for (uint64_t m = 0; m < 16; m++) {
            if (run_protocol(phi, ChannelSpec{2, 0}, Forced{m}).fidelity < 1 - kFidelityTolerance) {
                return false;
            }
        }
        return true;
    });
    add("entanglement.concurrence", "C(g_1) = 1, C(|0000>) = 0, C(GHZ+) = 1", [&](std::string &) {
        return std::abs(concurrence(g1).value() - 1) <= 1e-12 && concurrence(Ket::basis("0000")).value() <= 1e-12 &&
               std::abs(concurrence(named_state("ghz+", 2)).value() - 1) <= 1e-12;
    });
    add("entanglement.magic", "real magic combinations and e_2 have C = 1", [&](std::string &) {
        const auto &m = magic_basis();
        Ket combo = (0.3 * m.e[0] + (-0.5) * m.e[3] + 0.8 * m.e[10] + 0.1 * m.e[15]).normalized();
        return std::abs(concurrence_magic(combo).value() - 1) <= 1e-12 &&
               std::abs(concurrence_magic(m.e[1]).value() - 1) <= 1e-12;
    });
    add("entanglement.orbit_g1", "the orbit of g_1 is the G-basis", [&](std::string &) {
        auto members = orbit(g1);
        GBasis basis = g_basis(2);
        for (size_t j = 0; j < 16; j++) {
            if (!equal_up_to_phase(members[j], basis[j])) {
                return false;
            }
        }
        return true;
    });
    add("entanglement.orbit_ghz", "the orbit of GHZ+ reaches GHZ+-, G+-, H+-, Z+-", [&](std::string &) {
        auto members = orbit(named_state("ghz+", 2));
        for (const char *name : {"ghz+", "ghz-", "g+", "g-", "h+", "h-", "z+", "z-"}) {
            Ket target = named_state(name, 2);
            if (std::none_of(members.begin(), members.end(), [&](const Ket &k) { return equal_up_to_phase(k, target); })) {
                return false;
            }
        }
        return true;
    });
    add("entanglement.subsets", "orthogonal subsets: 16 for g_1, 8 for GHZ+, 8 for W", [&](std::string &detail) {
        auto count = [](const Ket &k) {
            auto flags = orthogonal_subset(orbit(k));
            return size_t(std::count(flags.begin(), flags.end(), true));
        };
        size_t lg = count(g1);
        size_t lghz = count(named_state("ghz+", 2));
        size_t lw = count(named_state("w", 2));
        detail = std::to_string(lg) + "/" + std::to_string(lghz) + "/" + std::to_string(lw);
        return lg == 16 && lghz == 8 && lw == 8;
    });
    add("entanglement.e_t", "E_T: 1 for every g_j, 1/2 for GHZ+, 0 for W", [&](std::string &) {
        for (int label = 1; label <= 16; label++) {
            if (std::abs(entanglement_of_teleportation(tabulated_g_state(label)).e_t - 1) > 1e-10) {
                return false;
            }
        }
        double ghz = entanglement_of_teleportation(named_state("ghz+", 2)).e_t;
        double w = entanglement_of_teleportation(named_state("w", 2)).e_t;
        return std::abs(ghz - 0.5) <= 1e-10 && std::abs(w) <= 1e-10 && w < ghz && ghz < 1;
    });
    add("entanglement.named", "GHZ+, Z- and W amplitudes", [&](std::string &) {
        Ket ghz = (Ket::basis("0000") + Ket::basis("1111")).scaled(r2);
        Ket zm = (Ket::basis("1100") - Ket::basis("0011")).scaled(r2);
        Ket w = 0.5 * (Ket::basis("0001") + Ket::basis("0010") + Ket::basis("0100") + Ket::basis("1000"));
        return named_state("ghz+", 2) == ghz && named_state("z-", 2) == zm && named_state("w", 2) == w;
    });
    return out;
}

std::string render(const std::vector<CheckResult> &results) {
    std::ostringstream out;
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.description;
        if (!r.detail.empty()) {
            out << " [" << r.detail << "]";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace gtele::checks
