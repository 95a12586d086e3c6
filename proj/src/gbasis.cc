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

#include "gtele/gbasis.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gtele {

namespace {

void require_protocol_width(size_t n) {
    if (n == 0 || n > kMaxProtocolWidth) {
        throw CapacityError(
            "N = " + std::to_string(n) + " is outside the supported range [1, " + std::to_string(kMaxProtocolWidth) +
            "].");
    }
}

}  // namespace

Ket seed_state(size_t n) {
    require_protocol_width(n);
    const size_t side = size_t{1} << n;
    const double amp = std::pow(2.0, -double(n) / 2);
    std::vector<Amplitude> amps(side * side);
    for (size_t x = 0; x < side; x++) {
        amps[x * side + x] = amp;
    }
    return Ket(2 * n, std::move(amps));
}

Ket g_state(uint64_t j, size_t n) {
    require_protocol_width(n);
    return apply_pauli_string(seed_state(n), pauli_string(j, n), 0);
}

GBasis::GBasis(size_t n) : n_(n) {
    if (n == 0 || n > kMaxBasisWidth) {
        throw CapacityError(
            "Materialized G-basis supports N in [1, " + std::to_string(kMaxBasisWidth) + "], got " +
            std::to_string(n) + ".");
    }
    const Ket seed = seed_state(n);
    const uint64_t count = uint64_t{1} << (2 * n);
    states_.reserve(count);
    for (uint64_t j = 0; j < count; j++) {
        states_.push_back(apply_pauli_string(seed, pauli_string(j, n), 0));
    }
}

GBasis g_basis(size_t n) {
    return GBasis(n);
}

Ket tabulated_g_state(int label) {
    if (label < 1 || label > 16) {
        throw std::out_of_range("g-label must lie in [1, 16], got " + std::to_string(label) + ".");
    }
    // Each group shares four basis labels; the member within the group picks
    // the sign pattern.
    static constexpr std::array<std::array<const char *, 4>, 4> kGroupTerms{{
        {"0000", "0101", "1010", "1111"},
        {"0001", "0100", "1011", "1110"},
        {"0010", "0111", "1000", "1101"},
        {"0011", "0110", "1001", "1100"},
    }};
    static constexpr std::array<std::array<int, 4>, 4> kSigns{{
        {+1, +1, +1, +1},
        {+1, +1, -1, -1},
        {+1, -1, +1, -1},
        {+1, -1, -1, +1},
    }};
    const int group = (label - 1) / 4;
    const int member = (label - 1) % 4;
    std::vector<Amplitude> amps(16);
    for (int t = 0; t < 4; t++) {
        amps[std::stoul(kGroupTerms[group][t], nullptr, 2)] = 0.5 * kSigns[member][t];
    }
    return Ket(4, std::move(amps));
}

namespace {

std::array<int, 16> compute_s_to_g() {
    std::array<int, 16> table{};
    for (uint64_t j = 0; j < 16; j++) {
        Ket s = g_state(j, 2);
        int found = 0;
        for (int label = 1; label <= 16; label++) {
            if (s == tabulated_g_state(label)) {
                if (found != 0) {
                    throw std::logic_error("s-state matches more than one g-state.");
                }
                found = label;
            }
        }
        if (found == 0) {
            throw std::logic_error("s_" + std::to_string(j) + " matches no tabulated g-state exactly.");
        }
        table[j] = found;
    }
    return table;
}

const std::array<int, 16> &s_to_g_table() {
    static const std::array<int, 16> table = compute_s_to_g();
    return table;
}

}  // namespace

int s_to_g_label(uint64_t j) {
    if (j >= 16) {
        throw std::out_of_range("s-index must lie in [0, 16).");
    }
    return s_to_g_table()[j];
}

uint64_t g_label_to_s(int label) {
    const auto &table = s_to_g_table();
    for (uint64_t j = 0; j < 16; j++) {
        if (table[j] == label) {
            return j;
        }
    }
    throw std::out_of_range("g-label must lie in [1, 16], got " + std::to_string(label) + ".");
}

namespace {

MagicBasis build_magic_basis() {
    static constexpr std::array<int, 16> kRowToG{1, 2, 4, 3, 6, 5, 7, 8, 10, 9, 11, 12, 13, 14, 16, 15};
    const Amplitude I(0, 1);
    MagicBasis out{{}, {}, kRowToG};
    for (size_t r = 0; r < 16; r++) {
        Ket g = tabulated_g_state(kRowToG[r]);
        // Row r + 1 is even when r is odd.
        out.e.push_back(r % 2 == 1 ? g.scaled(I) : g);
        out.f.push_back(g);
    }
    return out;
}

}  // namespace

const MagicBasis &magic_basis() {
    static const MagicBasis basis = build_magic_basis();
    return basis;
}

}  // namespace gtele
