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

#ifndef GTELE_REFERENCE_TABLES_H
#define GTELE_REFERENCE_TABLES_H

// Hand-transcribed outcome tables for the one- and two-qubit protocols.
// These are fixtures: they are written out operator by operator and applied
// with single-qubit apply_pauli calls only, so they never route through
// PauliString or the basis generator they are used to check.

#include <array>
#include <string>
#include <vector>

#include "gtele/statevec.h"

namespace gtele::reference {

struct PauliFactor {
    PauliAxis axis;
    size_t qubit;
};

/// A product of single-qubit Paulis as written, leftmost factor acting last.
using OperatorProduct = std::vector<PauliFactor>;

Ket apply_product(const Ket &k, const OperatorProduct &ops);

std::string to_string(const OperatorProduct &ops);

/// One row of the single-qubit protocol over the |Psi-> channel.
struct OneQubitRow {
    std::string alice_result;
    Ket alice_state;
    /// Bob's qubit before correction as a linear map of (a, b):
    /// bob = bob_map * (a, b)^T.
    std::array<std::array<double, 2>, 2> bob_map;
    OperatorProduct correction;
};

const std::vector<OneQubitRow> &one_qubit_table();

/// One row of the two-qubit protocol over the g_1 channel.
struct TwoQubitRow {
    int g_label;
    /// Bob's pair before correction is bob_operator applied to the input.
    OperatorProduct bob_operator;
    OperatorProduct correction;
};

const std::vector<TwoQubitRow> &two_qubit_table();

}  // namespace gtele::reference

#endif
