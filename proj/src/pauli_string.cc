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

#include "gtele/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace gtele {

PauliString::PauliString(size_t width, uint64_t index) : width_(width), index_(index) {
    if (width == 0 || width > kMaxWidth) {
        throw std::out_of_range("Pauli string width " + std::to_string(width) + " outside [1, 9].");
    }
    if (index >= (uint64_t{1} << (2 * width))) {
        throw std::out_of_range(
            "Pauli string index " + std::to_string(index) + " out of range for width " + std::to_string(width) + ".");
    }
}

bool PauliString::z(size_t k) const {
    if (k == 0 || k > width_) {
        throw std::out_of_range("qubit out of range");
    }
    return (index_ >> (2 * k - 2)) & 1;
}

bool PauliString::x(size_t k) const {
    if (k == 0 || k > width_) {
        throw std::out_of_range("qubit out of range");
    }
    return (index_ >> (2 * k - 1)) & 1;
}

size_t PauliString::gate_count() const {
    return std::popcount(index_);
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (other.width_ != width_) {
        throw std::invalid_argument("Pauli string width mismatch.");
    }
    return PauliString(width_, index_ ^ other.index_);
}

std::string PauliString::str() const {
    std::string out;
    for (size_t k = 1; k <= width_; k++) {
        if (k > 1) {
            out += '.';
        }
        bool zk = z(k);
        bool xk = x(k);
        if (!zk && !xk) {
            out += 'I';
        } else {
            if (zk) {
                out += 'Z';
            }
            if (xk) {
                out += 'X';
            }
        }
    }
    return out;
}

PauliString pauli_string(uint64_t j, size_t n) {
    return PauliString(n, j);
}

}  // namespace gtele
