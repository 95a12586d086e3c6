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

#ifndef GTELE_PAULI_STRING_H
#define GTELE_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <string>

namespace gtele {

/// A tensor product of per-qubit factors drawn from {I, Z, X, ZX}, indexed by
/// a 2N-bit integer j.
///
/// Counting bits of j from the right starting at 1, bit 2k-1 selects Z on
/// qubit k and bit 2k selects X on qubit k. When both are set the factor is
/// Z·X, i.e. X acts first.
///
/// Because it is a product of single-qubit operators by construction, any
/// value of this type is implementable without entangling gates.
class PauliString {
   public:
    /// Largest width representable (2 * width bits must fit the index and
    /// the string must fit on a kMaxQubits ket).
    static constexpr size_t kMaxWidth = 9;

    /// Throws std::out_of_range when index >= 4^width or width is 0 or too
    /// large.
    PauliString(size_t width, uint64_t index);

    static PauliString identity(size_t width) { return PauliString(width, 0); }

    size_t width() const { return width_; }
    uint64_t index() const { return index_; }

    /// Flags for qubit k (1-based).
    bool z(size_t k) const;
    bool x(size_t k) const;

    bool is_identity() const { return index_ == 0; }

    /// Number of non-identity single-qubit gates (Z·X counts as two).
    size_t gate_count() const;

    /// Product up to global phase: the factor on each qubit composes by
    /// XOR of its flags.
    PauliString operator*(const PauliString &other) const;

    bool operator==(const PauliString &other) const = default;

    /// Per-qubit rendering such as "ZX.I" (qubit 1 first).
    std::string str() const;

   private:
    size_t width_;
    uint64_t index_;
};

/// The Pauli string with index j on N qubits.
PauliString pauli_string(uint64_t j, size_t n);

}  // namespace gtele

#endif
