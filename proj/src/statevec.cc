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

#include "gtele/statevec.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <iomanip>

#include "gtele/pauli_string.h"

namespace gtele {

namespace {

void require_same_dims(const Ket &a, const Ket &b, const char *op) {
    if (a.qubits() != b.qubits()) {
        throw DimensionError(
            std::string(op) + ": qubit count mismatch (" + std::to_string(a.qubits()) + " vs " +
            std::to_string(b.qubits()) + ").");
    }
}

std::string bit_label(uint64_t index, size_t qubits) {
    std::string s(qubits, '0');
    for (size_t k = 0; k < qubits; k++) {
        if ((index >> (qubits - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

}  // namespace

Ket::Ket(size_t qubits, std::vector<Amplitude> amps) : qubits_(qubits), amps_(std::move(amps)) {
    if (qubits == 0) {
        throw DimensionError("A ket needs at least one qubit.");
    }
    if (qubits > kMaxQubits) {
        throw CapacityError(
            "Ket of " + std::to_string(qubits) + " qubits exceeds the cap of " + std::to_string(kMaxQubits) + ".");
    }
    if (amps_.size() != (size_t{1} << qubits)) {
        throw DimensionError(
            "Expected " + std::to_string(size_t{1} << qubits) + " amplitudes for " + std::to_string(qubits) +
            " qubits, got " + std::to_string(amps_.size()) + ".");
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DimensionError("Ket amplitudes must be finite.");
        }
    }
}

Ket Ket::basis(size_t qubits, uint64_t label) {
    if (qubits > kMaxQubits) {
        throw CapacityError("Basis ket exceeds the qubit cap.");
    }
    if (qubits < 64 && label >= (uint64_t{1} << qubits)) {
        throw std::out_of_range("Basis label out of range.");
    }
    std::vector<Amplitude> amps(size_t{1} << qubits);
    amps[label] = 1;
    return Ket(qubits, std::move(amps));
}

Ket Ket::basis(std::string_view bits) {
    uint64_t label = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("Ket label must contain only 0 and 1: " + std::string(bits));
        }
        label = (label << 1) | uint64_t(c == '1');
    }
    return basis(bits.size(), label);
}

double Ket::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

bool Ket::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1) <= tol;
}

Ket Ket::normalized() const {
    double n2 = norm_squared();
    if (n2 == 0) {
        throw std::domain_error("Cannot normalize a zero vector.");
    }
    return scaled(1 / std::sqrt(n2));
}

Ket Ket::scaled(Amplitude factor) const {
    std::vector<Amplitude> out(amps_);
    for (auto &a : out) {
        a *= factor;
    }
    return Ket(qubits_, std::move(out));
}

Ket operator+(const Ket &a, const Ket &b) {
    require_same_dims(a, b, "add");
    std::vector<Amplitude> out(a.amps().begin(), a.amps().end());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] += b[i];
    }
    return Ket(a.qubits(), std::move(out));
}

Ket operator-(const Ket &a, const Ket &b) {
    return a + b.scaled(-1);
}

Ket operator*(Amplitude factor, const Ket &k) {
    return k.scaled(factor);
}

Ket tensor(const Ket &a, const Ket &b) {
    size_t total = a.qubits() + b.qubits();
    if (total > kMaxQubits) {
        throw CapacityError(
            "Tensor product of " + std::to_string(total) + " qubits exceeds the cap of " +
            std::to_string(kMaxQubits) + ".");
    }
    std::vector<Amplitude> out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a.amps()) {
        for (const auto &y : b.amps()) {
            out.push_back(x * y);
        }
    }
    return Ket(total, std::move(out));
}

Amplitude inner(const Ket &a, const Ket &b) {
    require_same_dims(a, b, "inner");
    Amplitude total = 0;
    for (size_t i = 0; i < a.size(); i++) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

Ket apply_pauli(const Ket &k, PauliAxis axis, size_t qubit) {
    if (qubit == 0 || qubit > k.qubits()) {
        throw std::out_of_range(
            "Qubit " + std::to_string(qubit) + " out of range for a " + std::to_string(k.qubits()) + "-qubit ket.");
    }
    const size_t mask = size_t{1} << (k.qubits() - qubit);
    std::vector<Amplitude> out(k.amps().begin(), k.amps().end());
    switch (axis) {
        case PauliAxis::X:
            for (size_t i = 0; i < out.size(); i++) {
                out[i] = k[i ^ mask];
            }
            break;
        case PauliAxis::Z:
            for (size_t i = 0; i < out.size(); i++) {
                if (i & mask) {
                    out[i] = -out[i];
                }
            }
            break;
        case PauliAxis::Y: {
            // Y|0> = i|1>, Y|1> = -i|0>.
            const Amplitude I(0, 1);
            for (size_t i = 0; i < out.size(); i++) {
                out[i] = (i & mask) ? I * k[i ^ mask] : -I * k[i ^ mask];
            }
            break;
        }
    }
    return Ket(k.qubits(), std::move(out));
}

Ket apply_pauli_string(const Ket &k, const PauliString &ps, size_t offset) {
    if (offset + ps.width() > k.qubits()) {
        throw std::out_of_range(
            "Pauli string of width " + std::to_string(ps.width()) + " at offset " + std::to_string(offset) +
            " does not fit a " + std::to_string(k.qubits()) + "-qubit ket.");
    }
    size_t flip = 0;
    size_t phase = 0;
    for (size_t q = 1; q <= ps.width(); q++) {
        size_t mask = size_t{1} << (k.qubits() - offset - q);
        if (ps.x(q)) {
            flip |= mask;
        }
        if (ps.z(q)) {
            phase |= mask;
        }
    }
    // With X first, output index i takes input i ^ flip, then Z negates by the
    // output bits.
    std::vector<Amplitude> out(k.size());
    for (size_t i = 0; i < out.size(); i++) {
        Amplitude v = k[i ^ flip];
        out[i] = (std::popcount(i & phase) & 1) ? -v : v;
    }
    return Ket(k.qubits(), std::move(out));
}

ProjectionResult project_prefix(const Ket &joint, const Ket &prefix) {
    if (prefix.qubits() >= joint.qubits()) {
        throw DimensionError(
            "Prefix of " + std::to_string(prefix.qubits()) + " qubits must be shorter than the " +
            std::to_string(joint.qubits()) + "-qubit joint state.");
    }
    const size_t rest = joint.qubits() - prefix.qubits();
    const size_t stride = size_t{1} << rest;
    std::vector<Amplitude> residual(stride);
    for (size_t x = 0; x < prefix.size(); x++) {
        if (prefix[x] == Amplitude(0)) {
            continue;
        }
        Amplitude c = std::conj(prefix[x]);
        const size_t base = x * stride;
        for (size_t y = 0; y < stride; y++) {
            residual[y] += c * joint[base + y];
        }
    }
    Ket raw(rest, std::move(residual));
    double p = raw.norm_squared();
    if (p == 0) {
        return {std::nullopt, 0.0};
    }
    return {raw.normalized(), p};
}

bool equal_up_to_phase(const Ket &a, const Ket &b, double tol) {
    return std::abs(inner(a, b)) >= 1 - tol;
}

Ket conjugate(const Ket &k) {
    std::vector<Amplitude> out(k.amps().begin(), k.amps().end());
    for (auto &a : out) {
        a = std::conj(a);
    }
    return Ket(k.qubits(), std::move(out));
}

double fidelity(const Ket &a, const Ket &b) {
    return std::norm(inner(a, b));
}

std::string to_string(const Ket &k) {
    std::ostringstream ss;
    ss << std::setprecision(12);
    bool first = true;
    for (size_t i = 0; i < k.size(); i++) {
        if (k[i] == Amplitude(0)) {
            continue;
        }
        if (!first) {
            ss << " + ";
        }
        first = false;
        ss << "(" << k[i].real() << (k[i].imag() < 0 ? "-" : "+") << std::abs(k[i].imag()) << "i)|"
           << bit_label(i, k.qubits()) << ">";
    }
    if (first) {
        ss << "0";
    }
    return ss.str();
}

}  // namespace gtele
