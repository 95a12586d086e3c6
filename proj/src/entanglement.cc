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

#include "gtele/entanglement.h"

#include <charconv>
#include <cmath>
#include <string>

#include "gtele/gbasis.h"
#include "gtele/pauli_string.h"

namespace gtele {

namespace {

void require_even(const Ket &k) {
    if (k.qubits() % 2 != 0) {
        throw DimensionError(
            "Concurrence needs an even number of qubits, got " + std::to_string(k.qubits()) + ".");
    }
}

void require_normalized(const Ket &k) {
    if (!k.is_normalized(1e-9)) {
        throw DimensionError("State must be normalized.");
    }
}

void require_four(const Ket &k) {
    if (k.qubits() != 4) {
        throw DimensionError("This form is defined on four qubits, got " + std::to_string(k.qubits()) + ".");
    }
}

}  // namespace

ConcurrenceValue::ConcurrenceValue(double value) : value_(value) {
    if (!(value >= 0) || value > 1 + kSlack) {
        throw std::domain_error("Concurrence " + std::to_string(value) + " outside [0, 1].");
    }
}

ConcurrenceValue concurrence(const Ket &k) {
    require_even(k);
    require_normalized(k);
    Ket flipped = k;
    for (size_t q = 1; q <= k.qubits(); q++) {
        flipped = apply_pauli(flipped, PauliAxis::Y, q);
    }
    return ConcurrenceValue(std::abs(inner(conjugate(k), flipped)));
}

std::array<Amplitude, 16> f_coefficients(const Ket &k) {
    require_four(k);
    const auto &basis = magic_basis();
    std::array<Amplitude, 16> out;
    for (size_t j = 0; j < 16; j++) {
        out[j] = inner(basis.f[j], k);
    }
    return out;
}

std::array<Amplitude, 16> magic_coefficients(const Ket &k) {
    require_four(k);
    const auto &basis = magic_basis();
    std::array<Amplitude, 16> out;
    for (size_t j = 0; j < 16; j++) {
        out[j] = inner(basis.e[j], k);
    }
    return out;
}

ConcurrenceValue concurrence_f(const Ket &k) {
    require_normalized(k);
    auto alpha = f_coefficients(k);
    Amplitude total = 0;
    for (size_t j = 0; j < 16; j++) {
        // 0-based even index is 1-based odd j, sign (-1)^(j+1) = +1.
        total += (j % 2 == 0) ? alpha[j] * alpha[j] : -alpha[j] * alpha[j];
    }
    return ConcurrenceValue(std::abs(total));
}

ConcurrenceValue concurrence_magic(const Ket &k) {
    require_normalized(k);
    auto beta = magic_coefficients(k);
    Amplitude total = 0;
    for (const auto &b : beta) {
        total += b * b;
    }
    return ConcurrenceValue(std::abs(total));
}

std::vector<Ket> orbit(const Ket &k, OrbitSide side) {
    require_even(k);
    const size_t n = k.qubits() / 2;
    if (n > kMaxBasisWidth) {
        throw CapacityError("Orbits are supported for N <= " + std::to_string(kMaxBasisWidth) + ".");
    }
    const size_t offset = side == OrbitSide::First ? 0 : n;
    const uint64_t count = uint64_t{1} << (2 * n);
    std::vector<Ket> out;
    out.reserve(count);
    for (uint64_t j = 0; j < count; j++) {
        out.push_back(apply_pauli_string(k, pauli_string(j, n), offset));
    }
    return out;
}

std::vector<bool> orthogonal_subset(const std::vector<Ket> &states, double tol) {
    std::vector<bool> included(states.size(), false);
    std::vector<size_t> kept;
    for (size_t j = 0; j < states.size(); j++) {
        bool ok = true;
        for (size_t i : kept) {
            if (std::abs(inner(states[i], states[j])) > tol || equal_up_to_phase(states[i], states[j])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            included[j] = true;
            kept.push_back(j);
        }
    }
    return included;
}

OrbitReport entanglement_of_teleportation(const Ket &k, OrbitSide side) {
    std::vector<Ket> members = orbit(k, side);
    std::vector<bool> included = orthogonal_subset(members);
    OrbitReport report{k, {}, 0, 0.0};
    report.members.reserve(members.size());
    double sum = 0;
    for (uint64_t j = 0; j < members.size(); j++) {
        ConcurrenceValue c = concurrence(members[j]);
        if (included[j]) {
            report.orthogonal_count++;
            sum += c.value();
        }
        report.members.push_back(OrbitMember{j, std::move(members[j]), included[j], c});
    }
    report.e_t = sum / double(report.members.size());
    return report;
}

namespace {

Ket pair_state(const char *first, const char *second, double sign) {
    return (Ket::basis(first) + Ket::basis(second).scaled(sign)).scaled(1 / std::sqrt(2.0));
}

std::optional<uint64_t> parse_index(std::string_view digits) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return value;
}

void require_n2(std::string_view name, size_t n) {
    if (n != 2) {
        throw std::invalid_argument("State '" + std::string(name) + "' is defined for N = 2 only.");
    }
}

}  // namespace

Ket named_state(std::string_view name, size_t n) {
    if (n == 0 || 2 * n > kMaxQubits) {
        throw CapacityError("N = " + std::to_string(n) + " is out of range.");
    }
    const size_t qubits = 2 * n;
    const uint64_t all_ones = (uint64_t{1} << qubits) - 1;
    if (name == "ghz+" || name == "ghz-") {
        double sign = name == "ghz+" ? 1 : -1;
        return (Ket::basis(qubits, 0) + Ket::basis(qubits, all_ones).scaled(sign)).scaled(1 / std::sqrt(2.0));
    }
    if (name == "w") {
        std::vector<Amplitude> amps(size_t{1} << qubits);
        for (size_t q = 0; q < qubits; q++) {
            amps[size_t{1} << q] = 1 / std::sqrt(double(qubits));
        }
        return Ket(qubits, std::move(amps));
    }
    if (name == "seed") {
        return seed_state(n);
    }
    if (name.size() == 2 && (name[1] == '+' || name[1] == '-')) {
        require_n2(name, n);
        double sign = name[1] == '+' ? 1 : -1;
        switch (name[0]) {
            case 'g':
                return pair_state("0100", "1011", sign);
            case 'h':
                return pair_state("1000", "0111", sign);
            case 'z':
                return pair_state("1100", "0011", sign);
            default:
                break;
        }
    }
    if (name.size() >= 2 && name[0] == 's') {
        if (auto j = parse_index(name.substr(1))) {
            return g_state(*j, n);
        }
    }
    if (name.size() >= 2 && name[0] == 'g') {
        if (auto label = parse_index(name.substr(1))) {
            require_n2(name, n);
            if (*label < 1 || *label > 16) {
                throw std::invalid_argument("g-label must lie in [1, 16].");
            }
            return tabulated_g_state(int(*label));
        }
    }
    throw std::invalid_argument("Unknown state name '" + std::string(name) + "'.");
}

}  // namespace gtele
