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

#ifndef GTELE_KET_JSON_H
#define GTELE_KET_JSON_H

#include <string>

#include "json.hpp"

#include "gtele/statevec.h"

namespace gtele {

// Ket document: {"qubits": n, "amplitudes": [[re, im], ...]} in index order.

nlohmann::json ket_to_json(const Ket &k);

/// Throws DimensionError on a wrong-length vector, non-finite entries, or a
/// malformed document.
Ket ket_from_json(const nlohmann::json &doc);

Ket parse_ket(const std::string &text);

}  // namespace gtele

#endif
