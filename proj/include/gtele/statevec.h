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

#ifndef GTELE_STATEVEC_H
#define GTELE_STATEVEC_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtele {

using Amplitude = std::complex<double>;

/// Largest number of qubits any Ket may hold. The protocol holds 3N qubits
/// jointly, so this caps teleportation at N = 6.
constexpr size_t kMaxQubits = 18;

/// Tolerance for the "is normalized" invariant.
constexpr double kNormTolerance = 1e-12;

/// Default tolerance for phase-insensitive comparisons.
constexpr double kCompareTolerance = 1e-10;

struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A pure state on `qubits` qubits stored as 2^qubits dense amplitudes.
///
/// Basis labels read left to right: qubit 1 is the most significant bit of
/// the amplitude index, so |b1 b2 ... bn> lives at index sum_k b_k 2^(n-k).
class Ket {
   public:
    /// Builds a ket from explicit amplitudes. Throws DimensionError when the
    /// length is not 2^qubits or an entry is not finite, CapacityError when
    /// qubits exceeds kMaxQubits.
    Ket(size_t qubits, std::vector<Amplitude> amps);

    /// The computational basis state |label> on `qubits` qubits.
    static Ket basis(size_t qubits, uint64_t label);

    /// Parses a ket string of 0/1 symbols, e.g. "0101".
    static Ket basis(std::string_view bits);

    size_t qubits() const { return qubits_; }
    size_t size() const { return amps_.size(); }
    std::span<const Amplitude> amps() const { return amps_; }
    const Amplitude &operator[](size_t i) const { return amps_[i]; }

    double norm_squared() const;
    bool is_normalized(double tol = kNormTolerance) const;

    /// Returns this ket scaled to unit norm. Throws std::domain_error on a
    /// zero vector.
    Ket normalized() const;

    Ket scaled(Amplitude factor) const;

    bool operator==(const Ket &other) const = default;

   private:
    size_t qubits_;
    std::vector<Amplitude> amps_;
};

Ket operator+(const Ket &a, const Ket &b);
Ket operator-(const Ket &a, const Ket &b);
Ket operator*(Amplitude factor, const Ket &k);

enum class PauliAxis { X, Y, Z };

class PauliString;

/// Outcome of contracting a prefix state against a joint ket.
struct ProjectionResult {
    /// Normalized state of the unmeasured suffix qubits. Empty iff the
    /// outcome has zero probability.
    std::optional<Ket> residual;
    double probability;
};

/// |a> (x) |b>, with a's qubits first.
Ket tensor(const Ket &a, const Ket &b);

/// <a|b>.
Amplitude inner(const Ket &a, const Ket &b);

/// Applies a single Pauli matrix to `qubit` (1-based).
Ket apply_pauli(const Ket &k, PauliAxis axis, size_t qubit);

/// Applies a Pauli string whose qubit 1 lands on ket qubit `offset + 1`.
/// On each qubit the X factor acts before the Z factor.
Ket apply_pauli_string(const Ket &k, const PauliString &ps, size_t offset = 0);

/// Contracts (<prefix| (x) I)|joint> over the leading prefix.qubits() qubits.
ProjectionResult project_prefix(const Ket &joint, const Ket &prefix);

/// True iff |<a|b>| >= 1 - tol.
bool equal_up_to_phase(const Ket &a, const Ket &b, double tol = kCompareTolerance);

/// Complex conjugate of every amplitude.
Ket conjugate(const Ket &k);

/// |<a|b>|^2.
double fidelity(const Ket &a, const Ket &b);

/// Renders a ket as a sum of labelled basis terms, skipping zero amplitudes.
std::string to_string(const Ket &k);

}  // namespace gtele

#endif
