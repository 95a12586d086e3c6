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

#ifndef GTELE_ACCEPTANCE_H
#define GTELE_ACCEPTANCE_H

// Executable versions of the library's published guarantees. Shared by the
// `selftest` subcommand and the acceptance test binary. All randomness is
// drawn from fixed seeds, so the reports are byte-stable.

#include <string>
#include <vector>

#include "gtele/pauli_string.h"
#include "gtele/reference_tables.h"
#include "gtele/statevec.h"

namespace gtele::checks {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed;
    std::string detail;
};

/// True iff the two operators agree on every computational basis state up
/// to one common global phase.
bool same_operator_up_to_phase(
    size_t qubits, const PauliString &ps, const reference::OperatorProduct &ops, double tol = kCompareTolerance);

/// Criteria 1-8, plus an in-process transcript determinism check as 9.
std::vector<CheckResult> acceptance_criteria();

/// The worked values that the protocol and measures must reproduce, one
/// check per value.
std::vector<CheckResult> worked_examples();

/// "PASS id description [detail]" lines.
std::string render(const std::vector<CheckResult> &results);

}  // namespace gtele::checks

#endif
