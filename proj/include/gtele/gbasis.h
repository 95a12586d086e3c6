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

#ifndef GTELE_GBASIS_H
#define GTELE_GBASIS_H

#include <array>
#include <cstdint>
#include <vector>

#include "gtele/pauli_string.h"
#include "gtele/statevec.h"

namespace gtele {

/// Largest N for which the seed state (and the 3N-qubit protocol) fits.
constexpr size_t kMaxProtocolWidth = kMaxQubits / 3;

/// Largest N for which g_basis() materializes the whole basis.
constexpr size_t kMaxBasisWidth = 4;

/// 2^-N/2 sum_x |x>_A |x>_B on 2N qubits.
Ket seed_state(size_t n);

/// |s_j> = U_j |s_0>, with U_j acting on the first N qubits.
Ket g_state(uint64_t j, size_t n);

/// The generalized Bell basis in s-order: states()[j] is |s_j>.
class GBasis {
   public:
    explicit GBasis(size_t n);

    size_t n() const { return n_; }
    size_t size() const { return states_.size(); }
    const std::vector<Ket> &states() const { return states_; }
    const Ket &operator[](size_t j) const { return states_[j]; }

   private:
    size_t n_;
    std::vector<Ket> states_;
};

/// Throws CapacityError above kMaxBasisWidth.
GBasis g_basis(size_t n);

/// The sixteen four-qubit states g_1 .. g_16 written out term by term in the
/// conventional g-numbering (four groups of four). Independent of the
/// generator. `label` is 1-based.
Ket tabulated_g_state(int label);

/// 1-based g-label of |s_j> at N = 2, found by exact amplitude match against
/// tabulated_g_state.
int s_to_g_label(uint64_t j);

/// Inverse of s_to_g_label.
uint64_t g_label_to_s(int label);

/// Four-qubit magic basis e_1..e_16 and its real partner basis f_1..f_16,
/// stored 0-based: e[0] is e_1.
///
/// Row r pairs e_r with a G-state; odd r: e_r = f_r = g, even r:
/// e_r = i f_r = i g.
struct MagicBasis {
    std::vector<Ket> e;
    std::vector<Ket> f;
    /// g-label paired with each row.
    std::array<int, 16> g_labels;
};

const MagicBasis &magic_basis();

}  // namespace gtele

#endif
