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

#ifndef GTELE_REPORT_IO_H
#define GTELE_REPORT_IO_H

// Text and JSON renderings of transcripts, orbit reports and basis dumps.
// Text output prints reals with 12 significant digits; JSON output keeps
// full binary64 round-trip precision.

#include <string>

#include "json.hpp"

#include "gtele/entanglement.h"
#include "gtele/gbasis.h"
#include "gtele/teleport.h"

namespace gtele {

/// "%.12g".
std::string format_real(double v);

nlohmann::json transcript_to_json(const Transcript &t);
Transcript transcript_from_json(const nlohmann::json &doc);
std::string transcript_to_text(const Transcript &t);

nlohmann::json orbit_report_to_json(const OrbitReport &r);
std::string orbit_report_to_text(const OrbitReport &r);

nlohmann::json basis_to_json(const GBasis &basis);
std::string basis_to_text(const GBasis &basis);

}  // namespace gtele

#endif
