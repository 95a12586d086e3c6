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

#include "gtele/reference_tables.h"

#include <cmath>

namespace gtele::reference {

Ket apply_product(const Ket &k, const OperatorProduct &ops) {
    Ket out = k;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        out = apply_pauli(out, it->axis, it->qubit);
    }
    return out;
}

std::string to_string(const OperatorProduct &ops) {
    if (ops.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &f : ops) {
        out += f.axis == PauliAxis::X ? 'X' : f.axis == PauliAxis::Y ? 'Y' : 'Z';
        out += std::to_string(f.qubit);
    }
    return out;
}

namespace {

constexpr PauliFactor X1{PauliAxis::X, 1};
constexpr PauliFactor X2{PauliAxis::X, 2};
constexpr PauliFactor Z1{PauliAxis::Z, 1};
constexpr PauliFactor Z2{PauliAxis::Z, 2};

Ket bell(const char *first, const char *second, double sign) {
    return (Ket::basis(first) + Ket::basis(second).scaled(sign)).scaled(1 / std::sqrt(2.0));
}

}  // namespace

const std::vector<OneQubitRow> &one_qubit_table() {
    static const std::vector<OneQubitRow> table{
        {"Psi-", bell("01", "10", -1), {{{-1, 0}, {0, -1}}}, {}},
        {"Psi+", bell("01", "10", +1), {{{-1, 0}, {0, 1}}}, {Z1}},
        {"Phi-", bell("00", "11", -1), {{{0, 1}, {1, 0}}}, {X1}},
        {"Phi+", bell("00", "11", +1), {{{0, -1}, {1, 0}}}, {Z1, X1}},
    };
    return table;
}

const std::vector<TwoQubitRow> &two_qubit_table() {
    static const std::vector<TwoQubitRow> table{
        {1, {}, {}},
        {2, {Z1}, {Z1}},
        {3, {Z2}, {Z2}},
        {4, {Z1, Z2}, {Z2, Z1}},
        {5, {X2}, {X2}},
        {6, {X2, Z1}, {Z1, X2}},
        {7, {X2, Z2}, {Z2, X2}},
        {8, {X2, Z2, Z1}, {Z1, Z2, X2}},
        {9, {X1}, {X1}},
        {10, {X1, Z1}, {Z1, X1}},
        {11, {X1, Z2}, {Z2, X1}},
        {12, {X1, Z1, Z2}, {Z2, Z1, X1}},
        {13, {X1, X2}, {X2, X1}},
        {14, {X1, X2, Z1}, {Z1, X2, X1}},
        {15, {X1, X2, Z2}, {Z2, X2, X1}},
        {16, {X1, X2, Z1, Z2}, {Z2, Z1, X2, X1}},
    };
    return table;
}

}  // namespace gtele::reference
