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

#ifndef GTELE_ENTANGLEMENT_H
#define GTELE_ENTANGLEMENT_H

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gtele/statevec.h"

namespace gtele {

/// A concurrence in [0, 1 + 1e-10].
class ConcurrenceValue {
   public:
    static constexpr double kSlack = 1e-10;

    /// Throws std::domain_error outside the admissible range.
    explicit ConcurrenceValue(double value);
    double value() const { return value_; }

   private:
    double value_;
};

/// |<conj(k)| Y^(x)2N |k>|, the spin-flip overlap with the computational
/// conjugate. Requires an even qubit count and a normalized state.
ConcurrenceValue concurrence(const Ket &k);

/// alpha_j = <f_j|k>, j = 1..16 stored 0-based.
std::array<Amplitude, 16> f_coefficients(const Ket &k);

/// beta_j = <e_j|k>, j = 1..16 stored 0-based.
std::array<Amplitude, 16> magic_coefficients(const Ket &k);

/// |sum_j (-1)^(j+1) alpha_j^2| over the F-basis. Four qubits only.
ConcurrenceValue concurrence_f(const Ket &k);

/// |sum_j beta_j^2| over the magic basis. Four qubits only.
ConcurrenceValue concurrence_magic(const Ket &k);

/// Which half of a 2N-qubit state the orbit operators act on.
enum class OrbitSide { First, Last };

/// Member j is U_j applied to the chosen half of k.
std::vector<Ket> orbit(const Ket &k, OrbitSide side = OrbitSide::First);

/// Greedy selection in index order: a state is kept iff it is orthogonal
/// (|inner| <= tol) to every kept state and not a phase duplicate of one.
std::vector<bool> orthogonal_subset(const std::vector<Ket> &states, double tol = kCompareTolerance);

struct OrbitMember {
    uint64_t j;
    Ket state;
    bool included;
    ConcurrenceValue concurrence;
};

struct OrbitReport {
    Ket source;
    std::vector<OrbitMember> members;
    size_t orthogonal_count;
    /// 2^-2N times the summed concurrence of the included members.
    double e_t;
};

OrbitReport entanglement_of_teleportation(const Ket &k, OrbitSide side = OrbitSide::First);

/// States by name: "ghz+", "ghz-", "w", "seed", "sJ" (G-state with s-index
/// J) on 2N qubits for any N; "g+", "g-", "h+", "h-", "z+", "z-", "gJ"
/// (g-numbered, J in 1..16) at N = 2 only. Throws std::invalid_argument on
/// an unknown name.
Ket named_state(std::string_view name, size_t n);

}  // namespace gtele

#endif
