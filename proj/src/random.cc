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

#include "gtele/random.h"

#include <cmath>
#include <numbers>

namespace gtele {

double Rng::uniform() {
    return double(next() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    // 1 - u1 lies in (0, 1], so the log is finite.
    return std::sqrt(-2 * std::log(1 - u1)) * std::cos(2 * std::numbers::pi * u2);
}

uint64_t mix_seed(uint64_t seed) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Ket random_ket(size_t qubits, Rng &rng) {
    std::vector<Amplitude> amps(size_t{1} << qubits);
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = {re, im};
    }
    return Ket(qubits, std::move(amps)).normalized();
}

Ket random_product_ket(size_t qubits, Rng &rng) {
    Ket out = random_ket(1, rng);
    for (size_t q = 1; q < qubits; q++) {
        out = tensor(out, random_ket(1, rng));
    }
    return out;
}

}  // namespace gtele
